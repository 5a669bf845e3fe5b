#include "skewrank/codefile.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include "skewrank/errors.hpp"

namespace skewrank {

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    const size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

std::optional<long> to_long(const std::string& s) {
  long v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
  return v;
}

}  // namespace

ParsedCode parse_code(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  std::optional<SchemeParams> params;
  FieldPtr field;
  long declared_k = -1;
  int header_line = 0;
  std::vector<SkewMat> rows;
  std::vector<std::string> warnings;

  while (std::getline(in, line)) {
    ++lineno;
    const auto tokens = tokenize(line);
    if (tokens.empty() || tokens[0].text[0] == '#') continue;

    if (!params) {
      header_line = lineno;
      std::map<std::string, Token> kv;
      for (const auto& tok : tokens) {
        const auto eq = tok.text.find('=');
        if (eq == std::string::npos || eq == 0) throw ParseError(lineno, tok.column, "expected key=value, got '" + tok.text + "'");
        const std::string key = tok.text.substr(0, eq);
        if (key != "q" && key != "t" && key != "k" && key != "modpoly") {
          throw ParseError(lineno, tok.column, "unknown header key '" + key + "'");
        }
        if (kv.count(key)) throw ParseError(lineno, tok.column, "duplicate header key '" + key + "'");
        kv.emplace(key, Token{tok.text.substr(eq + 1), tok.column + static_cast<int>(eq) + 1});
      }
      for (const char* key : {"q", "t", "k"}) {
        if (!kv.count(key)) throw ParseError(lineno, 0, std::string("header is missing '") + key + "='");
      }
      auto number = [&](const char* key) {
        const Token& tok = kv.at(key);
        const auto v = to_long(tok.text);
        if (!v) throw ParseError(lineno, tok.column, std::string("'") + key + "' must be an integer, got '" + tok.text + "'");
        return std::make_pair(*v, tok.column);
      };
      const auto [q, qcol] = number("q");
      const auto [t, tcol] = number("t");
      const auto [k, kcol] = number("k");
      if (k < 0) throw ParseError(lineno, kcol, "k must be >= 0");
      if (t < 2 || t > 64) throw ParseError(lineno, tcol, "t must lie in 2..64");
      std::optional<std::vector<int>> modulus;
      if (kv.count("modpoly")) {
        const Token& tok = kv.at("modpoly");
        std::vector<int> coeffs;
        std::stringstream parts(tok.text);
        std::string part;
        while (std::getline(parts, part, ',')) {
          const auto v = to_long(part);
          if (!v) throw ParseError(lineno, tok.column, "modpoly entries must be integers");
          coeffs.push_back(static_cast<int>(*v));
        }
        modulus = coeffs;
      }
      try {
        params = SchemeParams::make(q, static_cast<int>(t));
        field = make_field(q, modulus);
      } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, qcol, e.what());
      }
      declared_k = k;
      continue;
    }

    const size_t N = upper_size(params->t);
    if (tokens.size() != N) {
      throw ParseError(lineno, 0, "expected " + std::to_string(N) + " entries, got " + std::to_string(tokens.size()));
    }
    Row r(N);
    for (size_t i = 0; i < N; ++i) {
      const auto v = to_long(tokens[i].text);
      if (!v) throw ParseError(lineno, tokens[i].column, "'" + tokens[i].text + "' is not an integer");
      if (*v < 0 || *v >= params->q) {
        throw ParseError(lineno, tokens[i].column,
                         "entry " + tokens[i].text + " is outside [0, " + std::to_string(params->q) + ")");
      }
      r[i] = static_cast<Elem>(*v);
    }
    rows.emplace_back(params->t, std::move(r));
  }
  if (!params) throw ParseError(lineno + 1, 0, "missing header line 'q=<int> t=<int> k=<int>'");
  if (static_cast<long>(rows.size()) != declared_k) {
    warnings.push_back("header on line " + std::to_string(header_line) + " declares k=" + std::to_string(declared_k) +
                       " but " + std::to_string(rows.size()) + " rows follow");
  }
  size_t dropped = 0;
  LinearCode code = LinearCode::from_rows(field, *params, rows, &dropped);
  if (dropped) {
    warnings.push_back(std::to_string(dropped) + " linearly dependent row(s) dropped; dimension is " +
                       std::to_string(code.dimension()));
  }
  return {std::move(code), std::move(warnings)};
}

ParsedCode read_code_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_code(ss.str());
}

std::string serialize_code(const LinearCode& c) {
  std::ostringstream os;
  os << "q=" << c.params().q << " t=" << c.params().t << " k=" << c.dimension();
  const auto& mod = c.field().modulus();
  if (!mod.empty()) {
    os << " modpoly=";
    for (size_t i = 0; i < mod.size(); ++i) os << (i ? "," : "") << mod[i];
  }
  os << "\n";
  for (const auto& b : c.basis()) {
    for (size_t i = 0; i < b.upper.size(); ++i) os << (i ? " " : "") << static_cast<int>(b.upper[i]);
    os << "\n";
  }
  return os.str();
}

}  // namespace skewrank
