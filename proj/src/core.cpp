// Copyright 2026 The mvrmf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mvrmf/core.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <sstream>

namespace mvrmf {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain:
      return "domain";
    case ErrorKind::Parse:
      return "parse";
    case ErrorKind::UnsupportedArity:
      return "unsupported-arity";
    case ErrorKind::NotCompressible:
      return "not-compressible";
    case ErrorKind::Resource:
      return "resource";
    case ErrorKind::Io:
      return "io";
  }
  return "unknown";
}

Radix::Radix(Digit p) : p_(p) {
  if (p < 2) {
    throw Error(ErrorKind::Domain,
                "radix must be at least 2, got " + std::to_string(p));
  }
}

std::size_t table_size(Radix p, std::size_t n) {
  if (n == 0) throw Error(ErrorKind::Domain, "argument count must be positive");
  std::size_t size = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (size > std::numeric_limits<std::size_t>::max() / p.value()) {
      throw Error(ErrorKind::Resource,
                  std::to_string(p.value()) + "^" + std::to_string(n) +
                      " does not fit in a machine word");
    }
    size *= p.value();
  }
  return size;
}

std::size_t index_of(std::span<const Digit> a, Radix p) {
  if (a.empty()) throw Error(ErrorKind::Domain, "empty assignment");
  table_size(p, a.size());
  std::size_t index = 0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (!p.contains(a[k])) {
      throw Error(ErrorKind::Domain, "digit " + std::to_string(a[k]) +
                                         " at position " + std::to_string(k) +
                                         " is not below p = " +
                                         std::to_string(p.value()));
    }
    index = index * p.value() + a[k];
  }
  return index;
}

Assignment assignment_of(std::size_t index, Radix p, std::size_t n) {
  const std::size_t size = table_size(p, n);
  if (index >= size) {
    throw Error(ErrorKind::Domain, "index " + std::to_string(index) +
                                       " out of range for " +
                                       std::to_string(size) + " assignments");
  }
  Assignment a(n);
  for (std::size_t k = n; k-- > 0;) {
    a[k] = static_cast<Digit>(index % p.value());
    index /= p.value();
  }
  return a;
}

std::string format_digits(std::span<const Digit> digits, Radix p) {
  std::string out;
  if (p.value() <= 10) {
    out.reserve(digits.size());
    for (Digit d : digits) out.push_back(static_cast<char>('0' + d));
    return out;
  }
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k != 0) out.push_back(',');
    out += std::to_string(digits[k]);
  }
  return out;
}

std::string format_assignment(std::span<const Digit> a, Radix p) {
  return format_digits(a, p);
}

ValueVector::ValueVector(Radix p, std::size_t n, std::vector<Digit> values)
    : p_(p), n_(n), values_(std::move(values)) {
  const std::size_t size = table_size(p, n);
  if (values_.size() != size) {
    throw Error(ErrorKind::Domain,
                "value vector for p = " + std::to_string(p.value()) +
                    ", n = " + std::to_string(n) + " needs " +
                    std::to_string(size) + " entries, got " +
                    std::to_string(values_.size()));
  }
  const auto bad = std::find_if(values_.begin(), values_.end(),
                                [p](Digit d) { return !p.contains(d); });
  if (bad != values_.end()) {
    throw Error(ErrorKind::Domain,
                "value " + std::to_string(*bad) + " at index " +
                    std::to_string(bad - values_.begin()) +
                    " is not below p = " + std::to_string(p.value()));
  }
}

ValueVector ValueVector::zeros(Radix p, std::size_t n) {
  return ValueVector(p, n, std::vector<Digit>(table_size(p, n), 0));
}

namespace {

bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

}  // namespace

std::vector<Digit> parse_digits(std::string_view text, Radix p,
                                std::size_t count) {
  std::size_t begin = 0;
  std::size_t end = text.size();
  while (begin < end && is_space(text[begin])) ++begin;
  while (end > begin && is_space(text[end - 1])) --end;

  std::vector<Digit> digits;
  digits.reserve(count);

  auto check = [&](Digit d, std::size_t pos) {
    if (!p.contains(d)) {
      throw ParseError(pos, "value " + std::to_string(d) +
                                " is not below p = " +
                                std::to_string(p.value()));
    }
    if (digits.size() == count) {
      throw ParseError(pos, "expected " + std::to_string(count) + " values");
    }
    digits.push_back(d);
  };

  if (p.value() <= 10) {
    for (std::size_t pos = begin; pos < end; ++pos) {
      const char c = text[pos];
      if (c < '0' || c > '9') {
        throw ParseError(pos, std::string("unexpected character '") + c + "'");
      }
      check(static_cast<Digit>(c - '0'), pos);
    }
  } else {
    std::size_t pos = begin;
    while (pos < end) {
      std::size_t stop = text.find(',', pos);
      if (stop == std::string_view::npos || stop > end) stop = end;
      std::size_t tb = pos;
      std::size_t te = stop;
      while (tb < te && is_space(text[tb])) ++tb;
      while (te > tb && is_space(text[te - 1])) --te;
      Digit value = 0;
      const auto [ptr, ec] =
          std::from_chars(text.data() + tb, text.data() + te, value);
      if (tb == te || ec != std::errc{} || ptr != text.data() + te) {
        throw ParseError(tb, "malformed integer token");
      }
      check(value, tb);
      pos = stop + 1;
      if (stop + 1 == end) throw ParseError(end, "trailing comma");
    }
  }
  if (digits.size() != count) {
    throw ParseError(end, "expected " + std::to_string(count) +
                              " values, got " + std::to_string(digits.size()));
  }
  return digits;
}

ValueVector parse_value_vector(std::string_view text, Radix p, std::size_t n) {
  return ValueVector(p, n, parse_digits(text, p, table_size(p, n)));
}

std::string format_value_vector(const ValueVector& f) {
  return format_digits(f.values(), f.radix());
}

std::string format_map(std::span<const Digit> values, Radix p, std::size_t n) {
  const std::size_t size = table_size(p, n);
  if (values.size() != size) {
    throw Error(ErrorKind::Domain, "map needs " + std::to_string(size) +
                                       " values, got " +
                                       std::to_string(values.size()));
  }
  const std::size_t columns = size / p.value();

  std::string corner = "x1";
  if (n > 1) {
    corner += '\\';
    for (std::size_t k = 2; k <= n; ++k) corner += "x" + std::to_string(k);
  }

  std::vector<std::string> labels(columns);
  for (std::size_t c = 0; c < columns; ++c) {
    labels[c] = n > 1 ? format_assignment(assignment_of(c, p, n - 1), p) : "f";
  }
  std::vector<std::size_t> width(columns);
  for (std::size_t c = 0; c < columns; ++c) {
    width[c] = labels[c].size();
    for (Digit r = 0; r < p.value(); ++r) {
      width[c] = std::max(width[c],
                          std::to_string(values[r * columns + c]).size());
    }
  }
  const std::size_t row_width =
      std::max(corner.size(), std::to_string(p.value() - 1).size());

  auto pad = [](std::ostringstream& os, const std::string& s, std::size_t w) {
    os << std::string(w - s.size(), ' ') << s;
  };

  std::ostringstream os;
  os << corner << std::string(row_width - corner.size(), ' ');
  for (std::size_t c = 0; c < columns; ++c) {
    os << ' ';
    pad(os, labels[c], width[c]);
  }
  os << '\n';
  for (Digit r = 0; r < p.value(); ++r) {
    const std::string row = std::to_string(r);
    os << row << std::string(row_width - row.size(), ' ');
    for (std::size_t c = 0; c < columns; ++c) {
      os << ' ';
      pad(os, std::to_string(values[r * columns + c]), width[c]);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace mvrmf
