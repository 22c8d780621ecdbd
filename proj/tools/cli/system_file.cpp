#include "system_file.hpp"

#include <charconv>
#include <sstream>

namespace coverkit::cli {

namespace {

std::string_view strip(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    const auto next = s.find(sep, pos);
    out.push_back(s.substr(pos, next == std::string_view::npos ? next : next - pos));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size()) break;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> content_lines(std::string_view text) {
  auto lines = split(text, '\n');
  for (auto& l : lines) {
    if (const auto h = l.find('#'); h != std::string_view::npos) l = l.substr(0, h);
    l = strip(l);
  }
  return lines;
}

std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw std::invalid_argument("invalid integer '" + std::string(s) + "'");
  }
  return v;
}

Modulus parse_modulus(std::string_view s) {
  const std::int64_t v = parse_int(s);
  if (v <= 0) throw std::invalid_argument("modulus must be positive, got " + std::string(s));
  return static_cast<Modulus>(v);
}

}  // namespace

Rational parse_rational(std::string_view token) {
  const auto parts = split(token, '/');
  if (parts.size() > 2) throw std::invalid_argument("invalid rational '" + std::string(token) + "'");
  const Integer num(parse_int(parts[0]));
  const Integer den = parts.size() == 2 ? Integer(parse_int(parts[1])) : Integer(1);
  if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(token) + "'");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::vector<std::int64_t> parse_int_csv(std::string_view text) {
  std::vector<std::int64_t> out;
  for (auto part : split(strip(text), ',')) out.push_back(parse_int(strip(part)));
  return out;
}

std::vector<Modulus> parse_modulus_csv(std::string_view text) {
  std::vector<Modulus> out;
  for (auto part : split(strip(text), ',')) out.push_back(parse_modulus(strip(part)));
  return out;
}

const System& SystemFile::system() const {
  if (const auto* s = std::get_if<System>(&parsed)) return *s;
  throw Error("this command needs a one-dimensional system file");
}

std::vector<MultiSequence> SystemFile::multi() const {
  if (const auto* m = std::get_if<std::vector<MultiSequence>>(&parsed)) return *m;
  std::vector<MultiSequence> out;
  for (const auto& s : std::get<System>(parsed).seqs()) {
    out.emplace_back(IntVector{s.residue()}, ModVector{s.modulus()}, s.weight());
  }
  return out;
}

SystemFile parse_system(std::string_view text) {
  SystemFile file;
  std::vector<WeightedSequence> flat;
  std::vector<MultiSequence> multi;
  std::size_t dim = 0;
  const auto lines = content_lines(text);
  for (const auto raw : split(text, '\n')) file.source.emplace_back(raw);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    if (lines[i].empty()) continue;
    const auto tok = tokens(lines[i]);
    if (tok.size() < 2 || tok.size() > 3) {
      throw ParseError(lineno, "expected '<a> <n> [<p>/<q>]', got " +
                                   std::to_string(tok.size()) + " fields");
    }
    try {
      const auto residues = parse_int_csv(tok[0]);
      const auto moduli = parse_modulus_csv(tok[1]);
      if (residues.size() != moduli.size()) {
        throw std::invalid_argument("residue and modulus dimensions differ");
      }
      if (dim == 0) dim = residues.size();
      if (residues.size() != dim) {
        throw std::invalid_argument("mixed dimensions: expected " + std::to_string(dim) +
                                    ", got " + std::to_string(residues.size()));
      }
      const Rational weight = tok.size() == 3 ? parse_rational(tok[2]) : Rational(1);
      if (dim == 1) {
        flat.emplace_back(residues[0], moduli[0], weight);
      } else {
        multi.emplace_back(residues, moduli, weight);
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (dim == 0) throw ParseError(lines.size(), "no sequences in file");
  file.dimension = dim;
  if (dim == 1) {
    file.parsed = System(std::move(flat));
  } else {
    file.parsed = std::move(multi);
  }
  return file;
}

std::string serialize_system(const SystemFile& file) {
  std::ostringstream os;
  auto csv = [&](const auto& v) {
    for (std::size_t t = 0; t < v.size(); ++t) os << (t ? "," : "") << v[t];
  };
  auto weight = [&](const Rational& w) {
    os << " " << w.get_num().get_str() << "/" << w.get_den().get_str() << "\n";
  };
  if (const auto* s = std::get_if<System>(&file.parsed)) {
    for (const auto& seq : s->seqs()) {
      os << seq.input_residue() << " " << seq.modulus();
      weight(seq.weight());
    }
  } else {
    for (const auto& seq : std::get<std::vector<MultiSequence>>(file.parsed)) {
      csv(seq.residue());
      os << " ";
      csv(seq.modulus());
      weight(seq.weight());
    }
  }
  return os.str();
}

PeriodicValueTable parse_target(std::string_view text, Field field) {
  std::vector<Rational> values;
  const auto lines = content_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (auto tok : tokens(lines[i])) {
      try {
        values.push_back(parse_rational(tok));
      } catch (const std::exception& e) {
        throw ParseError(i + 1, e.what());
      }
    }
  }
  if (values.empty()) throw ParseError(lines.size(), "target file has no values");
  return PeriodicValueTable(field, std::move(values));
}

namespace {

CyclotomicElement parse_coeff(std::string_view text, std::uint64_t level) {
  // Normalize binary minus into "+ -" so terms split on '+'.
  std::string norm;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == ' ' || c == '\t') continue;
    if (c == '-' && !norm.empty() && norm.back() != '+' && norm.back() != '^') norm += '+';
    norm += c;
  }
  if (norm.empty()) throw std::invalid_argument("empty coefficient");
  CyclotomicElement out(level);
  for (auto term : split(norm, '+')) {
    if (term.empty()) throw std::invalid_argument("empty term in coefficient");
    Rational q = 1;
    std::int64_t power = 0;
    const auto z = term.find('z');
    if (z == std::string_view::npos) {
      q = parse_rational(term);
    } else {
      std::string_view head = term.substr(0, z);
      std::string_view tail = term.substr(z + 1);
      if (!head.empty() && head.back() == '*') head.remove_suffix(1);
      if (head == "-") {
        q = -1;
      } else if (!head.empty()) {
        q = parse_rational(head);
      }
      if (tail.empty()) {
        power = 1;
      } else if (tail.front() == '^') {
        power = parse_int(tail.substr(1));
      } else {
        throw std::invalid_argument("expected z^j in term '" + std::string(term) + "'");
      }
    }
    out.add_term(q, power);
  }
  return out;
}

}  // namespace

std::vector<ExpSequence> parse_coefficients(std::string_view text) {
  std::vector<ExpSequence> out;
  std::uint64_t level = 0;
  const auto lines = content_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto line = lines[i];
    if (line.empty()) continue;
    try {
      const auto tok = tokens(line);
      if (tok[0] == "level") {
        if (tok.size() != 2) throw std::invalid_argument("expected 'level N'");
        if (level != 0) throw std::invalid_argument("level declared twice");
        level = parse_modulus(tok[1]);
      } else if (tok[0] == "modulus") {
        if (tok.size() != 2) throw std::invalid_argument("expected 'modulus n'");
        out.push_back({parse_modulus(tok[1]), {}});
      } else {
        if (level == 0) throw std::invalid_argument("'level N' must come first");
        if (out.empty()) throw std::invalid_argument("term before any 'modulus' line");
        const auto sp = line.find_first_of(" \t");
        if (sp == std::string_view::npos) throw std::invalid_argument("expected '<t> <coeff>'");
        const std::int64_t t = parse_int(line.substr(0, sp));
        out.back().terms.push_back({t, parse_coeff(line.substr(sp + 1), level)});
      }
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (out.empty()) throw ParseError(lines.size(), "no 'modulus' sections in file");
  return out;
}

}  // namespace coverkit::cli
