// Pretty-printers so failed assertions show exact values.
#pragma once

#include <string>

#include "deltaq/partition.hpp"
#include "deltaq/qfield.hpp"
#include "deltaq/symfunc.hpp"
#include "doctest.h"

namespace doctest {

template <>
struct StringMaker<deltaq::CoefQT> {
  static String convert(const deltaq::CoefQT& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<deltaq::SymFunc> {
  static String convert(const deltaq::SymFunc& v) { return v.to_string().c_str(); }
};
template <>
struct StringMaker<deltaq::Partition> {
  static String convert(const deltaq::Partition& v) { return v.to_string().c_str(); }
};

}  // namespace doctest
