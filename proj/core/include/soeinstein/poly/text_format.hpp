#pragma once

// Plain-text polynomial format: one term per line, the exponents of each
// variable followed by the coefficient as `<numerator>/<denominator>`.
// Lines starting with '#' are comments. Two comment keys are understood:
//
//   # variables: x12 k l        variable order of the exponent columns
//   # provenance: <free text>   where the data came from
//
// A univariate file has one exponent column, a bivariate file two.

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "soeinstein/error.hpp"
#include "soeinstein/poly/sparse_poly.hpp"
#include "soeinstein/poly/unipoly.hpp"

namespace soe::poly {

struct PolyHeader {
  std::vector<Var> variables;
  std::vector<std::string> provenance;
  std::vector<std::string> comments;
};

namespace detail {

struct RawTerm {
  std::vector<int> exponents;
  BigRational coeff;
};

struct RawPolyText {
  PolyHeader header;
  std::vector<RawTerm> terms;
};

RawPolyText parse_poly_text(std::istream& in);
void write_header(std::ostream& out, const PolyHeader& header);

}  // namespace detail

template <std::size_t N>
SparsePoly<N> read_poly(std::istream& in, PolyHeader* header_out = nullptr) {
  detail::RawPolyText raw = detail::parse_poly_text(in);
  if (raw.header.variables.size() != N) {
    throw Error(ErrorCode::data_error, "expected " + std::to_string(N) + " variables in polynomial header, found " +
                                           std::to_string(raw.header.variables.size()));
  }
  typename SparsePoly<N>::Vars vars;
  std::copy(raw.header.variables.begin(), raw.header.variables.end(), vars.begin());
  SparsePoly<N> p(vars);
  for (const auto& t : raw.terms) {
    if (t.exponents.size() != N) throw Error(ErrorCode::data_error, "term arity does not match variable header");
    typename SparsePoly<N>::Exponents e;
    std::copy(t.exponents.begin(), t.exponents.end(), e.begin());
    p.add_term(e, t.coeff);
  }
  if (header_out != nullptr) *header_out = std::move(raw.header);
  return p;
}

template <std::size_t N>
void write_poly(std::ostream& out, const SparsePoly<N>& p, const std::vector<std::string>& provenance = {}) {
  PolyHeader h;
  h.variables.assign(p.vars().begin(), p.vars().end());
  h.provenance = provenance;
  detail::write_header(out, h);
  for (const auto& [e, c] : p.terms()) {
    for (int x : e) out << x << ' ';
    out << c.fraction_str() << '\n';
  }
}

UniPoly read_unipoly(std::istream& in, PolyHeader* header_out = nullptr);
void write_unipoly(std::ostream& out, const UniPoly& p, const std::vector<std::string>& provenance = {});

template <std::size_t N>
std::string to_text(const SparsePoly<N>& p) {
  std::ostringstream os;
  write_poly(os, p);
  return os.str();
}

}  // namespace soe::poly
