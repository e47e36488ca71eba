#include "occred/qdimacs.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <vector>

#include "occred/errors.hpp"

namespace occred {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::int64_t to_int(std::string_view token, std::size_t line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw SyntaxError(line, "malformed token '" + std::string(token) + "'");
  return value;
}

class Reader {
 public:
  void consume_line(std::string_view text, std::size_t line) {
    auto tokens = split_tokens(text);
    if (tokens.empty() || tokens[0] == "c") return;
    if (tokens[0] == "p") return header(tokens, line);
    if (!have_header_) throw SyntaxError(line, "content before `p cnf` header");
    if (tokens[0] == "a" || tokens[0] == "e") return quantifier(tokens, line);
    for (auto tok : tokens) literal(to_int(tok, line), line);
  }

  PrenexFormula finish(std::size_t line) {
    if (!have_header_) throw SyntaxError(line, "missing `p cnf` header");
    if (!pending_.empty()) throw SyntaxError(line, "last clause is not terminated by 0");
    if (f_.clauses.size() != declared_clauses_)
      throw SyntaxError(line, "header declares " + std::to_string(declared_clauses_) +
                                  " clauses, found " + std::to_string(f_.clauses.size()));
    validate(f_);
    return std::move(f_);
  }

 private:
  void header(const std::vector<std::string_view>& tokens, std::size_t line) {
    if (have_header_) throw SyntaxError(line, "duplicate header");
    if (tokens.size() != 4 || tokens[1] != "cnf")
      throw SyntaxError(line, "expected `p cnf <vars> <clauses>`");
    auto vars = to_int(tokens[2], line);
    auto clauses = to_int(tokens[3], line);
    if (vars < 0 || clauses < 0 || vars > 0xffffffffLL)
      throw SyntaxError(line, "negative or oversized header count");
    f_.variable_count = static_cast<std::uint32_t>(vars);
    declared_clauses_ = static_cast<std::size_t>(clauses);
    have_header_ = true;
  }

  void quantifier(const std::vector<std::string_view>& tokens, std::size_t line) {
    if (in_matrix_) throw SyntaxError(line, "quantifier line after clauses");
    QuantifierBlock block{tokens[0] == "a" ? Quantifier::Universal : Quantifier::Existential, {}};
    bool terminated = false;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (terminated) throw SyntaxError(line, "tokens after terminating 0");
      auto v = to_int(tokens[i], line);
      if (v == 0) {
        terminated = true;
        continue;
      }
      if (v < 0) throw SyntaxError(line, "negative variable in quantifier line");
      check_range(v, line);
      block.variables.emplace_back(static_cast<std::uint32_t>(v));
    }
    if (!terminated) throw SyntaxError(line, "quantifier line is not terminated by 0");
    if (block.variables.empty()) throw SyntaxError(line, "empty quantifier line");
    f_.blocks.push_back(std::move(block));
  }

  void literal(std::int64_t lit, std::size_t line) {
    in_matrix_ = true;
    if (lit == 0) {
      if (pending_.empty())
        throw EmptyClauseError("line " + std::to_string(line) + ": empty clause");
      f_.clauses.emplace_back(std::move(pending_));
      pending_.clear();
      return;
    }
    check_range(lit < 0 ? -lit : lit, line);
    pending_.push_back(Literal::from_dimacs(lit));
  }

  void check_range(std::int64_t v, std::size_t line) const {
    if (v > static_cast<std::int64_t>(f_.variable_count))
      throw SyntaxError(line, "variable " + std::to_string(v) + " exceeds header count");
  }

  PrenexFormula f_;
  std::vector<Literal> pending_;
  std::size_t declared_clauses_ = 0;
  bool have_header_ = false;
  bool in_matrix_ = false;
};

}  // namespace

PrenexFormula parse_qdimacs(std::istream& in) {
  Reader reader;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) reader.consume_line(line, ++number);
  return reader.finish(number);
}

PrenexFormula parse_qdimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_qdimacs(in);
}

PrenexFormula read_qdimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_qdimacs(in);
}

void write_qdimacs(std::ostream& out, const PrenexFormula& f) {
  out << "p cnf " << f.variable_count << ' ' << f.clauses.size() << '\n';
  for (const auto& b : f.blocks) {
    out << (b.kind == Quantifier::Universal ? 'a' : 'e');
    for (auto v : b.variables) out << ' ' << v.value;
    out << " 0\n";
  }
  for (const auto& c : f.clauses) {
    for (auto lit : c.literals) out << lit.dimacs() << ' ';
    out << "0\n";
  }
}

std::string serialize_qdimacs(const PrenexFormula& f) {
  std::ostringstream out;
  write_qdimacs(out, f);
  return out.str();
}

}  // namespace occred
