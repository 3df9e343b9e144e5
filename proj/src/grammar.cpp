#include "collagram/grammar.hpp"

#include <algorithm>
#include <cctype>

#include "collagram/report.hpp"

namespace collagram {

std::string escape_bytes(const std::string& raw, bool token_mode) {
  static const char hex[] = "0123456789ABCDEF";
  std::string out;
  out.reserve(raw.size());
  for (unsigned char c : raw) {
    bool plain = c >= 0x20 && c <= 0x7E && c != '\\';
    if (token_mode && (c == ' ' || c == '#')) plain = false;
    if (plain) {
      out.push_back(static_cast<char>(c));
    } else {
      out += "\\x";
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xF]);
    }
  }
  return out;
}

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string unescape_bytes(const std::string& text, size_t line) {
  std::string out;
  out.reserve(text.size());
  for (size_t i = 0; i < text.size();) {
    if (text[i] != '\\') {
      out.push_back(text[i]);
      ++i;
      continue;
    }
    if (i + 3 >= text.size() || (text[i + 1] != 'x' && text[i + 1] != 'X'))
      throw SyntaxError(line, "malformed escape in \"" + text + "\"");
    int hi = hex_value(text[i + 2]);
    int lo = hex_value(text[i + 3]);
    if (hi < 0 || lo < 0)
      throw SyntaxError(line, "bad hex digits in escape \"" +
                                  text.substr(i, 4) + "\"");
    out.push_back(static_cast<char>(hi * 16 + lo));
    i += 4;
  }
  return out;
}

CollageSystem::CollageSystem(std::vector<Rule> rules)
    : rules_(std::move(rules)) {
  if (rules_.empty()) throw ValidationError("system has no rules");
  const uint32_t n = size();
  length_.resize(n);
  height_.resize(n);
  for (uint32_t i = 1; i <= n; ++i) {
    const Rule& r = rules_[i - 1];
    auto check_ref = [&](uint32_t v, const char* role) {
      if (v == 0 || v >= i)
        throw ValidationError(i, std::string(role) + " X" + std::to_string(v) +
                                     " must name an earlier rule");
    };
    switch (r.kind) {
      case RuleKind::Terminal:
        length_[i - 1] = 1;
        height_[i - 1] = 1;
        break;
      case RuleKind::Concat:
        check_ref(r.left, "left operand");
        check_ref(r.right, "right operand");
        length_[i - 1] =
            checked_add_u64(length(r.left), length(r.right), "concat");
        height_[i - 1] = 1 + std::max(height(r.left), height(r.right));
        break;
      case RuleKind::Repeat:
        check_ref(r.base, "base");
        if (r.power < 2)
          throw ValidationError(i, "repeat power must be at least 2");
        length_[i - 1] = checked_mul_u64(length(r.base), r.power, "repeat");
        height_[i - 1] = 1 + height(r.base);
        break;
      case RuleKind::PrefTrunc:
      case RuleKind::SufTrunc:
        check_ref(r.base, "base");
        if (r.cut == 0) throw ValidationError(i, "cut must be at least 1");
        if (r.cut >= length(r.base))
          throw ValidationError(
              i, "cut " + std::to_string(r.cut) +
                     " must be smaller than the operand length " +
                     std::to_string(length(r.base)));
        length_[i - 1] = length(r.base) - r.cut;
        height_[i - 1] = 1 + height(r.base);
        break;
    }
  }
}

namespace {

// Splits on blanks; a token starting with '#' comments out the rest of the
// line (a literal '#' terminal must be written \x23).
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  size_t i = 0;
  auto is_blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && is_blank(line[i])) ++i;
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    if (line[i] == '#') break;
    toks.emplace_back(line, i, j - i);
    i = j;
  }
  return toks;
}

uint64_t parse_number(const std::string& tok, size_t line) {
  if (tok.empty()) throw SyntaxError(line, "expected a number");
  uint64_t v = 0;
  for (char c : tok) {
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw SyntaxError(line, "expected a number, got \"" + tok + "\"");
    uint64_t d = static_cast<uint64_t>(c - '0');
    if (v > (UINT64_MAX - d) / 10)
      throw SyntaxError(line, "integer literal out of range: \"" + tok + "\"");
    v = v * 10 + d;
  }
  return v;
}

uint32_t parse_var_ref(const std::string& tok, size_t line) {
  if (tok.size() < 2 || tok[0] != 'X')
    throw SyntaxError(line,
                      "expected a variable like X3, got \"" + tok + "\"");
  uint64_t v = parse_number(tok.substr(1), line);
  if (v == 0) throw SyntaxError(line, "variable ids start at X1");
  if (v > UINT32_MAX) throw SyntaxError(line, "variable id out of range");
  return static_cast<uint32_t>(v);
}

}  // namespace

CollageSystem parse_cs(const std::string& text) {
  std::vector<Rule> rules;
  size_t line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    ++line_no;
    std::vector<std::string> toks = tokenize(text.substr(pos, eol - pos));
    pos = eol + 1;
    if (toks.empty()) continue;

    uint32_t id = parse_var_ref(toks[0], line_no);
    if (id != rules.size() + 1)
      throw ValidationError(id, "rules must be numbered consecutively, "
                                "expected X" +
                                    std::to_string(rules.size() + 1));
    if (toks.size() < 2 || toks[1] != "=")
      throw SyntaxError(line_no, "expected '=' after " + toks[0]);
    if (toks.size() < 3) throw SyntaxError(line_no, "missing rule body");
    const std::string& kind = toks[2];
    auto want = [&](size_t count) {
      if (toks.size() != count)
        throw SyntaxError(line_no, "wrong number of arguments for '" + kind +
                                       "' rule");
    };
    if (kind == "term") {
      want(4);
      std::string sym = unescape_bytes(toks[3], line_no);
      if (sym.size() != 1)
        throw SyntaxError(line_no, "terminal must be a single byte");
      rules.push_back(Rule::term(static_cast<uint8_t>(sym[0])));
    } else if (kind == "cat") {
      want(5);
      rules.push_back(Rule::cat(parse_var_ref(toks[3], line_no),
                                parse_var_ref(toks[4], line_no)));
    } else if (kind == "rep") {
      want(5);
      rules.push_back(Rule::rep(parse_var_ref(toks[3], line_no),
                                parse_number(toks[4], line_no)));
    } else if (kind == "pretrunc") {
      want(5);
      rules.push_back(Rule::pretrunc(parse_var_ref(toks[3], line_no),
                                     parse_number(toks[4], line_no)));
    } else if (kind == "suftrunc") {
      want(5);
      rules.push_back(Rule::suftrunc(parse_var_ref(toks[3], line_no),
                                     parse_number(toks[4], line_no)));
    } else {
      throw SyntaxError(line_no, "unknown rule kind \"" + kind + "\"");
    }
  }
  return CollageSystem(std::move(rules));
}

std::string serialize_cs(const CollageSystem& cs) {
  std::string out;
  for (uint32_t i = 1; i <= cs.size(); ++i) {
    const Rule& r = cs.rule(i);
    out += "X" + std::to_string(i) + " = ";
    switch (r.kind) {
      case RuleKind::Terminal:
        out += "term " + escape_bytes(std::string(1, static_cast<char>(r.symbol)),
                                      /*token_mode=*/true);
        break;
      case RuleKind::Concat:
        out += "cat X" + std::to_string(r.left) + " X" +
               std::to_string(r.right);
        break;
      case RuleKind::Repeat:
        out += "rep X" + std::to_string(r.base) + " " +
               std::to_string(r.power);
        break;
      case RuleKind::PrefTrunc:
        out += "pretrunc X" + std::to_string(r.base) + " " +
               std::to_string(r.cut);
        break;
      case RuleKind::SufTrunc:
        out += "suftrunc X" + std::to_string(r.base) + " " +
               std::to_string(r.cut);
        break;
    }
    out += "\n";
  }
  return out;
}

SystemClass classify(const CollageSystem& cs) {
  bool has_trunc = false;
  bool has_rep = false;
  for (const Rule& r : cs.rules()) {
    has_trunc |= r.is_trunc();
    has_rep |= r.kind == RuleKind::Repeat;
  }
  if (has_trunc) return SystemClass::General;
  if (has_rep) return SystemClass::TruncationFree;

  // The root spine (the leftmost concat chain) stands in for the original
  // formulation's sequence part, so its concats are exempt from the unit
  // operand requirement; LZ78 output stays simple that way.
  std::vector<bool> spine(cs.size() + 1, false);
  uint32_t v = cs.root();
  spine[v] = true;
  while (cs.rule(v).kind == RuleKind::Concat) {
    v = cs.rule(v).left;
    spine[v] = true;
  }
  for (uint32_t i = 1; i <= cs.size(); ++i) {
    const Rule& r = cs.rule(i);
    if (r.kind == RuleKind::Concat && !spine[i] && cs.length(r.left) > 1 &&
        cs.length(r.right) > 1)
      return SystemClass::Regular;
  }
  return SystemClass::Simple;
}

const char* to_string(SystemClass c) {
  switch (c) {
    case SystemClass::Simple: return "simple";
    case SystemClass::Regular: return "regular";
    case SystemClass::TruncationFree: return "truncation-free";
    case SystemClass::General: return "general";
  }
  return "?";
}

VariableMetrics metrics(const CollageSystem& cs) {
  VariableMetrics m;
  m.length.resize(cs.size() + 1, 0);
  m.height.resize(cs.size() + 1, 0);
  for (uint32_t i = 1; i <= cs.size(); ++i) {
    m.length[i] = cs.length(i);
    m.height[i] = cs.height(i);
  }
  m.cls = classify(cs);
  return m;
}

}  // namespace collagram
