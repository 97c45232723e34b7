#pragma once

// File formats and emitters shared by the command-line tool and the test
// harness.
//
//   subdivision.json  {"k", "n", "cells": [[[i1, ..., ik], ...], ...]}
//   weights.json      {"k", "n", "weights": {"i1,...,ik": "p/q", ...}}
//   matrix.json       {"k", "n", "entries": [[[c0, c1, ...], ...], ...]}
//
// Subsets are ascending 1-based arrays, cells are sorted, rationals are
// strings and polynomial coefficients run from degree 0 upwards.

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "hyperstab/degeneration.hpp"
#include "hyperstab/stable_pair.hpp"

namespace hyperstab::io {

using Json = nlohmann::ordered_json;

// Malformed input: bad JSON, wrong shape, out-of-range subsets, or cells
// that do not form a subdivision.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

constexpr const char* kVersion = "0.1.0";

struct SubdivisionFile {
  hyper::HypersimplexConfig cfg{2, 4};
  geom::Subdivision subdivision;
};

Json subdivision_json(const hyper::HypersimplexConfig& cfg, const geom::Subdivision& s);
// Validates the cells as a polyhedral subdivision of Delta(k, n).
SubdivisionFile parse_subdivision(const Json& j);

Json weights_json(const hyper::HypersimplexConfig& cfg, const geom::Lifting& l);
// Every k-subset must carry a weight.
geom::Lifting parse_weights(const Json& j, hyper::HypersimplexConfig& cfg);

Json matrix_json(const degen::TMatrix& m);
degen::TMatrix parse_matrix(const Json& j);

Json strata_json(const pair::MatroidSubdivision& ms, const pair::StrataPoset& sp);
Json dual_complex_json(const pair::MatroidSubdivision& ms, const pair::DualComplex& dc);

// Stratum dimensions become rank=same clusters, divisor labels node
// attributes.
std::string strata_dot(const pair::MatroidSubdivision& ms, const pair::StrataPoset& sp);
std::string dual_complex_dot(const pair::MatroidSubdivision& ms, const pair::DualComplex& dc);

Json read_json(const std::filesystem::path& p);
// Arrays of scalars or of short scalar arrays stay on one line; the output
// ends with a newline.
std::string dump(const Json& j);
void write_text(const std::filesystem::path& p, const std::string& text);

}  // namespace hyperstab::io
