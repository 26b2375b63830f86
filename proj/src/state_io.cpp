// Copyright 2026 The qhtest Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qht/state_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qht {

namespace {

using nlohmann::json;

// 1-based (line, column) of a byte offset.
std::pair<std::size_t, std::size_t> locate(const std::string& text,
                                           std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

RealVector read_row(const json& row, const char* field, std::size_t r,
                    std::size_t dim) {
  const std::string where =
      std::string("\"") + field + "\" row " + std::to_string(r);
  if (!row.is_array() || row.size() != dim) {
    throw ParseError(where + " must be an array of " + std::to_string(dim) +
                     " numbers");
  }
  RealVector out(static_cast<Eigen::Index>(dim));
  for (std::size_t c = 0; c < dim; ++c) {
    if (!row[c].is_number()) {
      throw ParseError(where + ", column " + std::to_string(c) +
                       " is not a number");
    }
    out(static_cast<Eigen::Index>(c)) = row[c].get<double>();
  }
  return out;
}

void read_part(const json& doc, const char* field, std::size_t dim,
               ComplexMatrix& mat, bool imaginary) {
  const json& rows = doc.at(field);
  for (std::size_t r = 0; r < dim; ++r) {
    const RealVector row = read_row(rows[r], field, r, dim);
    for (std::size_t c = 0; c < dim; ++c) {
      Complex& z = mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
      if (imaginary) {
        z.imag(row(static_cast<Eigen::Index>(c)));
      } else {
        z.real(row(static_cast<Eigen::Index>(c)));
      }
    }
  }
}

}  // namespace

DensityMatrix parse_state(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = locate(text, e.byte ? e.byte - 1 : 0);
    std::string what = e.what();
    // Drop nlohmann's "[json.exception.parse_error.101] " prefix.
    if (const auto pos = what.find("] "); pos != std::string::npos) {
      what = what.substr(pos + 2);
    }
    throw ParseError(what, line, column);
  }
  if (!doc.is_object()) throw ParseError("state document must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() ||
      doc["dim"].get<long long>() < 1) {
    throw ParseError("\"dim\" must be a positive integer");
  }
  if (!doc.contains("re")) throw ParseError("missing field \"re\"");
  const auto dim = static_cast<std::size_t>(doc["dim"].get<long long>());
  for (const char* field : {"re", "im"}) {
    if (!doc.contains(field)) continue;
    const json& rows = doc[field];
    if (!rows.is_array() || rows.size() != dim) {
      throw ParseError(std::string("\"") + field + "\" must have " +
                       std::to_string(dim) + " rows (dim), found " +
                       std::to_string(rows.is_array() ? rows.size() : 0));
    }
  }
  ComplexMatrix mat = ComplexMatrix::Zero(static_cast<Eigen::Index>(dim),
                                          static_cast<Eigen::Index>(dim));
  read_part(doc, "re", dim, mat, false);
  if (doc.contains("im")) read_part(doc, "im", dim, mat, true);
  return DensityMatrix(mat);
}

DensityMatrix load_state(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open state file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error reading state file '" + path + "'");
  try {
    return parse_state(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const InvalidStateError& e) {
    throw InvalidStateError(path + ": " + e.what());
  }
}

std::string format_state(const DensityMatrix& rho) {
  const auto dim = static_cast<std::size_t>(rho.dim());
  json re = json::array();
  json im = json::array();
  for (std::size_t r = 0; r < dim; ++r) {
    json re_row = json::array();
    json im_row = json::array();
    for (std::size_t c = 0; c < dim; ++c) {
      const Complex z = rho.matrix()(static_cast<Eigen::Index>(r),
                                     static_cast<Eigen::Index>(c));
      re_row.push_back(z.real());
      im_row.push_back(z.imag());
    }
    re.push_back(std::move(re_row));
    im.push_back(std::move(im_row));
  }
  json doc = {{"dim", dim}, {"re", std::move(re)}, {"im", std::move(im)}};
  return doc.dump(2) + "\n";
}

void save_state(const DensityMatrix& rho, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write state file '" + path + "'");
  out << format_state(rho);
  if (!out) throw IoError("error writing state file '" + path + "'");
}

}  // namespace qht
