#include "deltaq/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>

#include <json.hpp>

#include "deltaq/delta_ops.hpp"
#include "deltaq/hall_littlewood.hpp"
#include "deltaq/parking.hpp"
#include "deltaq/partition.hpp"
#include "deltaq/qfield.hpp"
#include "deltaq/symfunc.hpp"

namespace deltaq {

std::string to_string(Status s) {
  switch (s) {
    case Status::equal:
      return "equal";
    case Status::mismatch:
      return "mismatch";
    case Status::skipped:
      return "skipped";
  }
  return "skipped";
}

namespace {

Status status_from_string(const std::string& s) {
  if (s == "equal") return Status::equal;
  if (s == "mismatch") return Status::mismatch;
  if (s == "skipped") return Status::skipped;
  throw std::invalid_argument("unknown status '" + s + "'");
}

const CoefQT kOne(1);

CoefQT qpow(int e) { return CoefQT::monomial(e); }
CoefQT sign(int e) { return e % 2 == 0 ? CoefQT(1) : CoefQT(-1); }

std::string render(const CoefQT& c) { return SymFunc::constant(c).to_string(); }

IdentityReport make_report(std::string id, Params params) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  return r;
}

void compare_scalars(IdentityReport& r, const CoefQT& lhs, const CoefQT& rhs) {
  r.lhs_render = render(lhs);
  r.rhs_render = render(rhs);
  if (lhs == rhs) {
    r.status = Status::equal;
  } else {
    r.status = Status::mismatch;
    r.witness = Witness{"[]", lhs.to_string(), rhs.to_string()};
  }
}

std::optional<Witness> first_difference(const SymFunc& lhs, const SymFunc& rhs) {
  std::vector<Partition> support;
  for (const auto& [lambda, c] : lhs.terms()) support.push_back(lambda);
  for (const auto& [lambda, c] : rhs.terms()) support.push_back(lambda);
  std::sort(support.begin(), support.end(), PartitionOrder());
  for (const auto& lambda : support) {
    const CoefQT a = lhs.coeff(lambda);
    const CoefQT b = rhs.coeff(lambda);
    if (!(a == b)) return Witness{lambda.to_string(), a.to_string(), b.to_string()};
  }
  return std::nullopt;
}

void compare_functions(IdentityReport& r, const SymFunc& lhs, const SymFunc& rhs) {
  r.lhs_render = lhs.to_string();
  r.rhs_render = rhs.to_string();
  r.witness = first_difference(lhs, rhs);
  r.status = r.witness ? Status::mismatch : Status::equal;
}

// The first Schur coefficient of f outside the hooks, reported against zero.
std::optional<Witness> first_non_hook(const SymFunc& f) {
  for (const auto& [lambda, c] : f.terms())
    if (!lambda.is_hook()) return Witness{lambda.to_string(), c.to_string(), "0"};
  return std::nullopt;
}

int int_param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(it->second, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != it->second.size())
    throw std::invalid_argument("parameter '" + key + "' is not an integer: '" + it->second + "'");
  return value;
}

Partition partition_param(const Params& p, const std::string& key) {
  auto it = p.find(key);
  if (it == p.end()) throw std::invalid_argument("missing parameter '" + key + "'");
  return Partition::parse(it->second);
}

Params int_params(std::initializer_list<std::pair<const char*, int>> items) {
  Params p;
  for (const auto& [k, v] : items) p[k] = std::to_string(v);
  return p;
}

HookParams hook_params(const Params& p) {
  HookParams h{int_param(p, "k"), int_param(p, "m"), int_param(p, "n")};
  h.validate();
  return h;
}

SymFunc elementary_or_one(int k) { return k == 0 ? SymFunc::constant(kOne) : SymFunc::e(k); }

template <class Body>
IdentityReport timed(std::string id, Params params, Body body) {
  const auto start = std::chrono::steady_clock::now();
  IdentityReport r = make_report(std::move(id), std::move(params));
  body(r);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

// Left side of Remmel's systems: sum_i c_i prod_{j=2}^{l} (1 - q^{i -+ (j-1)}).
CoefQT remmel_system_lhs(Prop33Part part, const HookParams& h, int l) {
  CoefQT total;
  for (int i = 1; i <= h.n; ++i) {
    CoefQT term = remmel_coeff(i, h);
    for (int j = 2; j <= l && !term.is_zero(); ++j)
      term *= kOne - qpow(part == Prop33Part::a ? i - j + 1 : i + j - 1);
    total += term;
  }
  return total;
}

CoefQT remmel_system_rhs(Prop33Part part, int k, int m, int l) {
  if (part == Prop33Part::a)
    return qpow(m + choose2(k + 2) - (k + 2) * l + 1) * qbinom(l - 2, k) * qbinom(m - 1, l - 2) * qpoch(l);
  return qpow(m + choose2(k + 1)) * qbinom(m - 1, k) * qbinom(m + l - (k + 2), m) * qpoch(l);
}

IdentityReport prop33_report(std::string id, Prop33Part part, int k, int m, int n, int l, bool enforce) {
  return timed(std::move(id), int_params({{"k", k}, {"m", m}, {"n", n}, {"l", l}}), [&](IdentityReport& r) {
    if (enforce && !(k + 2 <= l && l <= m + 1 && m + 1 <= n)) return;
    const HookParams h{k, m, n};
    h.validate();
    if (l < 0) throw std::invalid_argument("Remmel systems need l >= 0");
    compare_scalars(r, remmel_system_lhs(part, h, l), remmel_system_rhs(part, k, m, l));
  });
}

using Runner = std::function<IdentityReport(const std::string&, const Params&)>;

struct Entry {
  std::string id;
  Runner run;
};

IdentityReport run_eq10(const std::string& id, const Params& p) {
  return timed(id, p, [&](IdentityReport& r) {
    const HookParams h = hook_params(p);
    const SymFunc lhs = lhs_nu(h.nu(), h.n);
    const SymFunc rhs = rhs_hook(h);
    compare_functions(r, lhs, rhs);
    if (r.status == Status::equal) {
      // The shifted-Cauchy route must reproduce the common value.
      if (auto w = first_difference(remmel_kernel_sum(h), rhs)) {
        r.status = Status::mismatch;
        w->partition += " (kernel sum)";
        r.witness = w;
      }
    }
  });
}

IdentityReport run_cauchy(const std::string& id, const Params& p, CauchyVariant variant) {
  return timed(id, p, [&](IdentityReport& r) {
    const int n = int_param(p, "n");
    const int i = int_param(p, "i");
    if (n < 1 || i < 1) throw std::invalid_argument("shifted Cauchy checks need n, i >= 1");
    compare_functions(r, shifted_cauchy(n, i, variant), shifted_cauchy_transform(n, i));
  });
}

void require_nu_below_n(const Partition& nu, int n) {
  if (nu.size() < 1 || nu.size() >= n) throw std::invalid_argument("this check needs 1 <= |nu| <= n-1");
}

IdentityReport run_thm41(const std::string& id, const Params& p) {
  return timed(id, p, [&](IdentityReport& r) {
    const Partition nu = partition_param(p, "nu");
    const int n = int_param(p, "n");
    require_nu_below_n(nu, n);
    compare_functions(r, lhs_nu(nu, n), lhs_expansion_thm41(nu, n));
  });
}

IdentityReport run_cor42(const std::string& id, const Params& p) {
  return timed(id, p, [&](IdentityReport& r) {
    const HookParams h = hook_params(p);
    compare_functions(r, lhs_expansion_thm41(h.nu(), h.n), lhs_hook_closed(h));
  });
}

IdentityReport run_thm43(const std::string& id, const Params& p) {
  return timed(id, p, [&](IdentityReport& r) {
    const Partition nu = partition_param(p, "nu");
    const int j = int_param(p, "j");
    if (nu.empty()) throw std::invalid_argument("thm43 needs a nonempty nu");
    const auto e = schur_principal_eval(nu, j);
    compare_scalars(r, e.direct, e.charge_sum);
  });
}

IdentityReport run_thm44(const std::string& id, const Params& p) {
  return timed(id, p, [&](IdentityReport& r) {
    const Partition nu = partition_param(p, "nu");
    const int n = int_param(p, "n");
    if (nu.empty() || n < 1) throw std::invalid_argument("thm44 needs a nonempty nu and n >= 1");
    const SymFunc lhs = lhs_nu(nu, n);
    const SymFunc rhs = rhs_nu(nu, n);
    compare_functions(r, lhs, rhs);
    if (r.status != Status::equal) return;
    if (auto w = first_non_hook(lhs)) {
      r.status = Status::mismatch;
      w->partition += " (not a hook)";
      r.witness = w;
    }
  });
}

IdentityReport run_ghry(const std::string& id, const Params& p) {
  return timed(id, p, [&](IdentityReport& r) {
    const auto [left, right] = ghry_sides(int_param(p, "n"), int_param(p, "k"));
    compare_functions(r, left, right);
    if (r.status != Status::equal) return;
    if (auto w = first_non_hook(left)) {
      r.status = Status::mismatch;
      w->partition += " (not a hook)";
      r.witness = w;
    }
  });
}

IdentityReport run_hook_support(const std::string& id, const Params& p) {
  return timed(id, p, [&](IdentityReport& r) {
    const int n = int_param(p, "n");
    const int e = int_param(p, "e");
    if (n < 1 || e < 1) throw std::invalid_argument("hook_support needs n, e >= 1");
    const CoefQT u = qpow(e);
    compare_functions(r, transform(SymFunc::h(n), AlphabetTransform::scale_by(kOne - u)), hn_times_one_minus_u(n, u));
  });
}

IdentityReport run_deltaconj(const std::string& id, const Params& p, Endpoint endpoint) {
  return timed(id, p, [&](IdentityReport& r) {
    const int n = int_param(p, "n");
    const int k = int_param(p, "k");
    if (n < 1 || k < 1 || k > n) throw std::invalid_argument("Delta conjecture checks need 1 <= k <= n");
    const SymFunc F = elementary_or_one(k - 1);
    SymFunc symmetric_side;
    if (endpoint == Endpoint::t_zero) {
      symmetric_side = delta_prime_t0(F, n);
    } else {
      symmetric_side = delta_full(F, n, true).map_coefficients(
          [](const CoefQT& c) { return subs(c, CoefQT(0), CoefQT::t()); });
    }
    compare_functions(r, delta_side_combinatorial(n, k, endpoint), symmetric_side);
  });
}

IdentityReport run_wmu(const std::string& id, const Params& p) {
  return timed(id, p, [&](IdentityReport& r) {
    const Partition mu = partition_param(p, "mu");
    if (mu.empty()) throw std::invalid_argument("wmu_consistency needs a nonempty mu");
    compare_scalars(r, t0_specializations(mu).w, w_t0_cell_product(mu));
  });
}

// Report-only: "equal" records that the rank exceeds n; both renders are
// the numbers themselves and p(n) travels in the params.
IdentityReport run_span(const std::string& id, const Params& p) {
  return timed(id, p, [&](IdentityReport& r) {
    const int n = int_param(p, "n");
    const SpanReport s = span_dimension_report(n, n);
    r.params["count_nu"] = std::to_string(s.count_nu);
    r.params["partition_count"] = std::to_string(s.partition_count);
    r.lhs_render = render(CoefQT(s.rank));
    r.rhs_render = render(CoefQT(n));
    r.status = s.rank > n ? Status::equal : Status::mismatch;
    if (r.status == Status::mismatch)
      r.witness = Witness{"[]", std::to_string(s.rank), "rank must exceed " + std::to_string(n)};
  });
}

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {"prop31",
       [](const std::string&, const Params& p) {
         return check_prop31(int_param(p, "m"), int_param(p, "k"), int_param(p, "l"));
       }},
      {"cor32",
       [](const std::string&, const Params& p) {
         return check_cor32(int_param(p, "m"), int_param(p, "k"), int_param(p, "l"));
       }},
      {"prop33a",
       [](const std::string&, const Params& p) {
         return check_prop33(Prop33Part::a, int_param(p, "k"), int_param(p, "m"), int_param(p, "n"),
                             int_param(p, "l"));
       }},
      {"prop33b",
       [](const std::string&, const Params& p) {
         return check_prop33(Prop33Part::b, int_param(p, "k"), int_param(p, "m"), int_param(p, "n"),
                             int_param(p, "l"));
       }},
      {"eq13_system",
       [](const std::string& id, const Params& p) {
         // Every row j = l(mu), 1 <= j <= n, of the coefficient system.
         const int n = int_param(p, "n");
         const int j = int_param(p, "j");
         if (j < 1 || j > n) throw std::invalid_argument("eq13_system needs 1 <= j <= n");
         auto r = prop33_report(id, Prop33Part::a, int_param(p, "k"), int_param(p, "m"), n, j, false);
         r.params = p;
         return r;
       }},
      {"eq17",
       [](const std::string& id, const Params& p) {
         const int k = int_param(p, "k");
         const int m = int_param(p, "m");
         const int l = int_param(p, "l");
         if (l < k + 2 || l > m + 1) throw std::invalid_argument("eq17 covers k+2 <= l <= m+1; see eq17_outside");
         return prop33_report(id, Prop33Part::b, k, m, int_param(p, "n"), l, false);
       }},
      {"eq17_outside",
       [](const std::string& id, const Params& p) {
         const int k = int_param(p, "k");
         const int m = int_param(p, "m");
         const int n = int_param(p, "n");
         const int l = int_param(p, "l");
         if (l < 1 || l > n || (l >= k + 2 && l <= m + 1))
           throw std::invalid_argument("eq17_outside covers 1 <= l <= n outside k+2 <= l <= m+1");
         return prop33_report(id, Prop33Part::b, k, m, n, l, false);
       }},
      {"eq10", run_eq10},
      {"eq12", [](const std::string& id, const Params& p) { return run_cauchy(id, p, CauchyVariant::direct); }},
      {"eq16", [](const std::string& id, const Params& p) { return run_cauchy(id, p, CauchyVariant::inverse); }},
      {"thm41", run_thm41},
      {"cor42", run_cor42},
      {"thm43", run_thm43},
      {"thm44", run_thm44},
      {"ghry23", run_ghry},
      {"hook_support", run_hook_support},
      {"deltaconj_t0",
       [](const std::string& id, const Params& p) { return run_deltaconj(id, p, Endpoint::t_zero); }},
      {"deltaconj_q0",
       [](const std::string& id, const Params& p) { return run_deltaconj(id, p, Endpoint::q_zero); }},
      {"wmu_consistency", run_wmu},
      {"span_dim", run_span},
  };
  return entries;
}

std::size_t registry_index(const std::string& id) {
  const auto& entries = registry();
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i].id == id) return i;
  throw UnknownIdentityError("unknown identity '" + id + "'");
}

Params partition_params(const char* key, const Partition& nu, std::initializer_list<std::pair<const char*, int>> rest) {
  Params p = int_params(rest);
  p[key] = nu.to_string();
  return p;
}

void sweep(const std::string& id, int nmax, std::vector<Check>& out) {
  auto add = [&](Params p) { out.push_back({id, std::move(p)}); };
  auto hooks = [&](bool k_positive) {
    for (int n = 2; n <= nmax; ++n)
      for (int m = 1; m < n; ++m)
        for (int k = k_positive ? 1 : 0; k <= m - 1; ++k) add(int_params({{"k", k}, {"m", m}, {"n", n}}));
  };
  if (id == "prop31") {
    for (int m = 1; m + 1 <= nmax; ++m)
      for (int k = 0; k + 1 <= m; ++k)
        for (int l = k + 2; l <= m + 1; ++l) add(int_params({{"m", m}, {"k", k}, {"l", l}}));
  } else if (id == "cor32") {
    for (int m = 0; m <= nmax; ++m)
      for (int k = 0; k <= nmax; ++k)
        for (int l = 0; l <= nmax + 2; ++l) add(int_params({{"m", m}, {"k", k}, {"l", l}}));
  } else if (id == "prop33a" || id == "prop33b") {
    for (int m = 1; m + 1 <= nmax; ++m)
      for (int k = 0; k <= m - 1; ++k)
        for (int l = k + 2; l <= m + 1; ++l) add(int_params({{"k", k}, {"m", m}, {"n", nmax}, {"l", l}}));
  } else if (id == "eq13_system") {
    for (int m = 1; m < nmax; ++m)
      for (int k = 0; k <= m - 1; ++k)
        for (int j = 1; j <= nmax; ++j) add(int_params({{"k", k}, {"m", m}, {"n", nmax}, {"j", j}}));
  } else if (id == "eq17" || id == "eq17_outside") {
    const bool inside = id == "eq17";
    for (int m = 2; m < nmax; ++m)
      for (int k = 1; k <= m - 1; ++k)
        for (int l = 1; l <= nmax; ++l)
          if ((l >= k + 2 && l <= m + 1) == inside) add(int_params({{"k", k}, {"m", m}, {"n", nmax}, {"l", l}}));
  } else if (id == "eq10") {
    hooks(true);
  } else if (id == "cor42") {
    hooks(false);
  } else if (id == "eq12" || id == "eq16") {
    for (int n = 1; n <= nmax; ++n)
      for (int i = 1; i <= n; ++i) add(int_params({{"n", n}, {"i", i}}));
  } else if (id == "thm41" || id == "thm44") {
    // The general theorem places no bound on |nu|; its sweep goes past n.
    const int extra = id == "thm44" ? 2 : 0;
    for (int n = 2; n <= nmax; ++n)
      for (int size = 1; size < n + extra; ++size)
        for (const auto& nu : partitions_of(size)) add(partition_params("nu", nu, {{"n", n}}));
  } else if (id == "thm43") {
    for (int size = 1; size <= nmax; ++size)
      for (const auto& nu : partitions_of(size))
        for (int j = 1; j <= nmax + 2; ++j) add(partition_params("nu", nu, {{"j", j}}));
  } else if (id == "ghry23" || id == "deltaconj_t0" || id == "deltaconj_q0") {
    for (int n = 1; n <= nmax; ++n)
      for (int k = 1; k <= n; ++k) add(int_params({{"n", n}, {"k", k}}));
  } else if (id == "hook_support") {
    for (int n = 1; n <= nmax; ++n)
      for (int e = 1; e <= 3; ++e) add(int_params({{"n", n}, {"e", e}}));
  } else if (id == "wmu_consistency") {
    for (int n = 1; n <= nmax; ++n)
      for (const auto& mu : partitions_of(n)) add(partition_params("mu", mu, {}));
  } else if (id == "span_dim") {
    for (int n = 1; n <= nmax; ++n) add(int_params({{"n", n}}));
  } else {
    throw UnknownIdentityError("unknown identity '" + id + "'");
  }
}

}  // namespace

std::string to_json_line(const IdentityReport& r) {
  nlohmann::ordered_json j;
  j["identity_id"] = r.identity_id;
  j["params"] = r.params;
  j["status"] = to_string(r.status);
  j["lhs_render"] = r.lhs_render;
  j["rhs_render"] = r.rhs_render;
  if (r.witness)
    j["witness"] = {{"partition", r.witness->partition}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
  else
    j["witness"] = nullptr;
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump();
}

IdentityReport from_json_line(std::string_view line) {
  const auto j = nlohmann::json::parse(line);
  IdentityReport r;
  r.identity_id = j.at("identity_id").get<std::string>();
  r.params = j.at("params").get<std::map<std::string, std::string>>();
  r.status = status_from_string(j.at("status").get<std::string>());
  r.lhs_render = j.at("lhs_render").get<std::string>();
  r.rhs_render = j.at("rhs_render").get<std::string>();
  if (!j.at("witness").is_null()) {
    const auto& w = j.at("witness");
    r.witness = Witness{w.at("partition").get<std::string>(), w.at("lhs").get<std::string>(),
                        w.at("rhs").get<std::string>()};
  }
  r.elapsed_ms = j.at("elapsed_ms").get<long>();
  return r;
}

Params parse_params(std::string_view text) {
  Params out;
  std::size_t start = 0;
  int depth = 0;
  auto trim = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  auto flush = [&](std::size_t end) {
    const std::string_view item = trim(text.substr(start, end - start));
    if (item.empty()) return;
    const auto eq = item.find('=');
    const std::string_view key = eq == std::string_view::npos ? item : trim(item.substr(0, eq));
    if (eq == std::string_view::npos || key.empty())
      throw std::invalid_argument("parameter '" + std::string(item) + "' is not key=value");
    out[std::string(key)] = std::string(trim(item.substr(eq + 1)));
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '[') ++depth;
    if (text[i] == ']') --depth;
    if (depth < 0) throw std::invalid_argument("unbalanced brackets in parameters");
    if (text[i] == ',' && depth == 0) {
      flush(i);
      start = i + 1;
    }
  }
  if (depth != 0) throw std::invalid_argument("unbalanced brackets in parameters");
  flush(text.size());
  return out;
}

IdentityReport check_prop31(int m, int k, int l) {
  return timed("prop31", int_params({{"m", m}, {"k", k}, {"l", l}}), [&](IdentityReport& r) {
    if (k < 0 || !(k + 2 <= l && l <= m + 1)) return;
    CoefQT lhs;
    for (int i = 0; i <= std::min(k + 2, m + 1 - l); ++i)
      lhs += sign(i) * qpow(choose2(i)) * qbinom(k + 2, i) * qbinom(m + 1 - i, l);
    compare_scalars(r, lhs, qpow((k + 2) * (m + 1 - l)) * qbinom(m - k - 1, l - 2 - k));
  });
}

IdentityReport check_cor32(int m, int k, int l) {
  return timed("cor32", int_params({{"m", m}, {"k", k}, {"l", l}}), [&](IdentityReport& r) {
    if (m < 0 || k < 0 || l < 0) throw std::invalid_argument("cor32 needs m, k, l >= 0");
    CoefQT lhs;
    for (int i = 0; i <= std::min(k + 2, m); ++i)
      lhs += sign(i) * qpow(choose2(i)) * qbinom(k + 2, i) * qbinom(m + l - i, l);
    compare_scalars(r, lhs, qpow((k + 2) * m) * qbinom(m + l - (k + 2), l - (k + 2)));
  });
}

IdentityReport check_prop33(Prop33Part part, int k, int m, int n, int l, bool enforce_hypothesis) {
  return prop33_report(part == Prop33Part::a ? "prop33a" : "prop33b", part, k, m, n, l, enforce_hypothesis);
}

const std::vector<std::string>& identity_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.id);
    return out;
  }();
  return ids;
}

IdentityReport run_identity(const std::string& id, const Params& params) {
  return registry()[registry_index(id)].run(id, params);
}

std::vector<IdentityReport> run_checks(const std::vector<Check>& checks) {
  std::vector<std::pair<std::size_t, IdentityReport>> indexed;
  for (const auto& c : checks) indexed.emplace_back(registry_index(c.id), run_identity(c.id, c.params));
  // Registry order first; within an id the sweep order is kept.
  std::stable_sort(indexed.begin(), indexed.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<IdentityReport> out;
  for (auto& [index, report] : indexed) out.push_back(std::move(report));
  return out;
}

std::vector<std::string> suite_names() {
  std::vector<std::string> names = identity_ids();
  for (const char* extra : {"hook", "remmel", "t0-delta", "q0-delta", "all"}) names.emplace_back(extra);
  return names;
}

std::vector<Check> suite_checks(const std::string& name, int nmax) {
  if (nmax < 0) throw std::invalid_argument("nmax must be nonnegative");
  std::vector<Check> out;
  if (name == "hook") {
    sweep("eq10", nmax, out);
  } else if (name == "remmel") {
    for (const char* id : {"prop31", "cor32", "prop33a", "prop33b", "eq13_system", "eq17", "eq17_outside"})
      sweep(id, nmax, out);
  } else if (name == "t0-delta") {
    sweep("deltaconj_t0", nmax, out);
  } else if (name == "q0-delta") {
    sweep("deltaconj_q0", nmax, out);
  } else if (name == "all") {
    for (const auto& id : identity_ids()) sweep(id, nmax, out);
  } else {
    sweep(name, nmax, out);
  }
  return out;
}

std::vector<IdentityReport> run_suite(const std::string& name, int nmax) {
  return run_checks(suite_checks(name, nmax));
}

SuiteSummary summarize(const std::vector<IdentityReport>& reports) {
  SuiteSummary s;
  for (const auto& r : reports) {
    if (r.status == Status::equal) ++s.equal;
    if (r.status == Status::mismatch) ++s.mismatch;
    if (r.status == Status::skipped) ++s.skipped;
  }
  return s;
}

}  // namespace deltaq
