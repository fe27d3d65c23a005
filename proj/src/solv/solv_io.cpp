#include "dcx/solv/solv_io.hpp"

#include <sstream>

#include "dcx/error.hpp"
#include "dcx/lie/lie_io.hpp"

namespace dcx {

namespace {

Mask mask_of(const std::vector<long>& indices, std::size_t dim, const text::Line& line,
             std::size_t token) {
  Mask m = 0;
  for (long i : indices) {
    if (i < 0 || static_cast<std::size_t>(i) >= dim) line.fail(token, "index out of range");
    if (m >> i & 1) line.fail(token, "index repeated");
    m |= Mask{1} << i;
  }
  return m;
}

std::string indices_of(Mask m, const std::string& separator) {
  std::string out;
  for (int i = 0; m; ++i, m >>= 1) {
    if (!(m & 1)) continue;
    if (!out.empty()) out += separator;
    out += std::to_string(i);
  }
  return out;
}

// Handles `gamma_trivial all|identically` and returns true; false means the
// line carries an explicit set.
template <class Key>
bool read_keyword_flags(const text::Line& line, GammaFlags<Key>& flags, bool& seen_any) {
  line.expect_at_least(2);
  const std::string& word = line.tokens[1].text;
  const bool keyword = word == "all" || word == "identically";
  if (seen_any && (keyword || flags.mode != GammaFlags<Key>::Mode::listed)) {
    line.fail(1, "'all' and 'identically' cannot be combined with other gamma_trivial lines");
  }
  seen_any = true;
  if (!keyword) {
    flags.mode = GammaFlags<Key>::Mode::listed;
    return false;
  }
  line.expect_count(2);
  flags.mode = word == "all" ? GammaFlags<Key>::Mode::all : GammaFlags<Key>::Mode::identically;
  return true;
}

template <class Key>
std::string flags_keyword(const GammaFlags<Key>& flags) {
  return flags.mode == GammaFlags<Key>::Mode::all ? "all" : "identically";
}

}  // namespace

SolvData parse_solv(std::istream& in) {
  SolvData sd;
  const auto rest = read_lie_lines(text::tokenize(in), sd.g);
  const std::size_t n = sd.g.dim();
  sd.weights.assign(n, Vector(n));
  std::vector<std::vector<bool>> set(n, std::vector<bool>(n));
  bool seen_flags = false;
  for (const auto& line : rest) {
    if (line.keyword() == "weight") {
      line.expect_at_least(4);
      const std::size_t i = line.count(1);
      const std::size_t j = line.count(2);
      if (i >= n) line.fail(1, "index out of range");
      if (j >= n) line.fail(2, "index out of range");
      if (set[i][j]) line.fail(1, "weight given twice");
      set[i][j] = true;
      sd.weights[i][j] = line.trailing_scalar(3);
    } else if (line.keyword() == "gamma_trivial") {
      if (read_keyword_flags(line, sd.flags, seen_flags)) continue;
      std::string joined;
      for (std::size_t k = 1; k < line.tokens.size(); ++k) joined += line.tokens[k].text + " ";
      if (joined.front() != '{' || joined.find('}') != joined.size() - 2) {
        line.fail(1, "expected '{ <indices> }'");
      }
      std::vector<long> indices;
      std::istringstream body(joined.substr(1, joined.size() - 3));
      std::string piece;
      while (body >> piece) {
        const auto part = text::split_integers(piece, line, 1);
        indices.insert(indices.end(), part.begin(), part.end());
      }
      sd.flags.listed.insert(mask_of(indices, n, line, 1));
    } else {
      line.fail(0, "unknown keyword '" + line.keyword() + "'");
    }
  }
  return sd;
}

SolvData parse_solv_string(const std::string& text) {
  std::istringstream in(text);
  return parse_solv(in);
}

std::string write_solv(const SolvData& sd) {
  std::string out = write_lie(sd.g);
  for (std::size_t i = 0; i < sd.weights.size(); ++i) {
    for (std::size_t j = 0; j < sd.weights[i].size(); ++j) {
      if (sd.weights[i][j].is_zero()) continue;
      out += "weight " + std::to_string(i) + " " + std::to_string(j) + " " +
             sd.weights[i][j].to_string() + "\n";
    }
  }
  if (sd.flags.mode != GammaFlags<Mask>::Mode::listed) {
    out += "gamma_trivial " + flags_keyword(sd.flags) + "\n";
  } else {
    for (Mask s : sd.flags.listed) {
      const std::string body = indices_of(s, " ");
      out += "gamma_trivial {" + (body.empty() ? std::string(" ") : " " + body + " ") + "}\n";
    }
  }
  return out;
}

SplittingData parse_splitting(std::istream& in) {
  SplittingData sp;
  const auto lines = text::tokenize(in);
  std::vector<text::Line> lie_lines;
  std::vector<text::Line> other;
  bool has_abelian = false;
  for (const auto& line : lines) {
    if (line.keyword() == "abelian") {
      line.expect_count(2);
      if (has_abelian) line.fail(0, "abelian given twice");
      has_abelian = true;
      sp.n_abelian = line.count(1);
      if (sp.n_abelian > 8) line.fail(1, "abelian factor too large");
    } else if (line.keyword() == "dim" || line.keyword() == "bracket") {
      lie_lines.push_back(line);
    } else {
      other.push_back(line);
    }
  }
  if (!has_abelian) throw ParseError(1, 1, "missing 'abelian <n>' line");
  if (lie_lines.empty()) {
    sp.nilp = LieAlgebra(0);
  } else {
    read_lie_lines(lie_lines, sp.nilp);
  }
  const std::size_t n = sp.n_abelian;
  const std::size_t m = sp.nilp.dim();
  sp.phi.assign(m, Character::trivial(n));
  std::vector<bool> seen_phi(m);
  bool seen_flags = false;
  for (const auto& line : other) {
    if (line.keyword() == "phi") {
      line.expect_count(2 + 2 * n);
      const std::size_t j = line.count(1);
      if (j >= m) line.fail(1, "index out of range");
      if (seen_phi[j]) line.fail(1, "phi given twice");
      seen_phi[j] = true;
      for (std::size_t a = 0; a < n; ++a) {
        sp.phi[j].hol[a] = line.scalar(2 + a);
        sp.phi[j].antihol[a] = line.scalar(2 + n + a);
      }
    } else if (line.keyword() == "gamma_trivial") {
      if (read_keyword_flags(line, sp.flags, seen_flags)) continue;
      line.expect_count(2);
      const std::string& body = line.tokens[1].text;
      const auto semi = body.find(';');
      if (semi == std::string::npos) line.fail(1, "expected '<J>;<L>'");
      const Mask j = mask_of(text::split_integers(body.substr(0, semi), line, 1), m, line, 1);
      const Mask l = mask_of(text::split_integers(body.substr(semi + 1), line, 1), m, line, 1);
      sp.flags.listed.insert({j, l});
    } else {
      line.fail(0, "unknown keyword '" + line.keyword() + "'");
    }
  }
  return sp;
}

SplittingData parse_splitting_string(const std::string& text) {
  std::istringstream in(text);
  return parse_splitting(in);
}

std::string write_splitting(const SplittingData& sp) {
  std::string out = "abelian " + std::to_string(sp.n_abelian) + "\n" + write_lie(sp.nilp);
  for (std::size_t j = 0; j < sp.phi.size(); ++j) {
    out += "phi " + std::to_string(j);
    for (const auto& s : sp.phi[j].hol) out += " " + s.to_string();
    for (const auto& s : sp.phi[j].antihol) out += " " + s.to_string();
    out += "\n";
  }
  if (sp.flags.mode != GammaFlags<std::pair<Mask, Mask>>::Mode::listed) {
    out += "gamma_trivial " + flags_keyword(sp.flags) + "\n";
  } else {
    for (const auto& [j, l] : sp.flags.listed) {
      out += "gamma_trivial " + indices_of(j, ",") + ";" + indices_of(l, ",") + "\n";
    }
  }
  return out;
}

}  // namespace dcx
