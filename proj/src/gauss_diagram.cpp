#include "pseudoknot/gauss_diagram.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace pk {

ChordKind ChordKind::classical(int sign) {
  if (sign != 1 && sign != -1) throw ValidationError("classical sign must be +1 or -1");
  return ChordKind(sign);
}

GaussDiagram::GaussDiagram(std::vector<Endpoint> word, std::map<int, ChordKind> chords)
    : word_(std::move(word)), chords_(std::move(chords)) {
  if (word_.size() != 2 * chords_.size())
    throw ValidationError("word length must be twice the chord count");
  std::map<int, std::array<int, 2>> seen;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    const auto& e = word_[i];
    if (!chords_.contains(e.chord))
      throw ValidationError("endpoint of undeclared chord " + std::to_string(e.chord));
    auto& slot = seen[e.chord];
    auto& pos = positions_[e.chord];
    int r = e.role == Role::tail ? 0 : 1;
    if (slot[r]++ > 0)
      throw ValidationError("chord " + std::to_string(e.chord) + " has two " +
                            (r == 0 ? "tails" : "heads"));
    pos[r] = i;
  }
  for (const auto& [id, k] : chords_) {
    if (id < 1) throw ValidationError("chord ids must be positive");
    auto it = seen.find(id);
    if (it == seen.end() || it->second[0] != 1 || it->second[1] != 1)
      throw ValidationError("chord " + std::to_string(id) + " must appear exactly twice");
  }
}

ChordKind GaussDiagram::kind(int id) const {
  auto it = chords_.find(id);
  if (it == chords_.end()) throw UnknownChord("unknown chord " + std::to_string(id));
  return it->second;
}

const std::array<std::size_t, 2>& GaussDiagram::positions(int id) const {
  auto it = positions_.find(id);
  if (it == positions_.end()) throw UnknownChord("unknown chord " + std::to_string(id));
  return it->second;
}

int GaussDiagram::precrossing_count() const {
  return static_cast<int>(std::count_if(chords_.begin(), chords_.end(),
                                        [](const auto& c) { return c.second.is_precrossing(); }));
}

std::vector<int> GaussDiagram::classical_chords() const {
  std::vector<int> out;
  for (const auto& [id, k] : chords_)
    if (k.is_classical()) out.push_back(id);
  return out;
}

std::vector<int> GaussDiagram::precrossing_chords() const {
  std::vector<int> out;
  for (const auto& [id, k] : chords_)
    if (k.is_precrossing()) out.push_back(id);
  return out;
}

namespace {

struct Token {
  Endpoint endpoint;
  ChordKind kind;
};

Token parse_token(std::string_view tok) {
  auto fail = [&](const char* why) {
    return ParseError("bad token '" + std::string(tok) + "': " + why);
  };
  if (tok.empty()) throw fail("empty token");
  bool pre = false;
  Role role;
  std::size_t i = 0;
  if (tok[0] == 'P') {
    pre = true;
    if (tok.size() < 2 || (tok[1] != 'o' && tok[1] != 'u')) throw fail("expected Po or Pu");
    role = tok[1] == 'o' ? Role::tail : Role::head;
    i = 2;
  } else if (tok[0] == 'O' || tok[0] == 'U') {
    role = tok[0] == 'O' ? Role::tail : Role::head;
    i = 1;
  } else {
    throw fail("expected O, U, Po or Pu");
  }
  std::size_t j = i;
  while (j < tok.size() && tok[j] >= '0' && tok[j] <= '9') ++j;
  if (j == i) throw fail("missing chord id");
  if (tok[i] == '0') throw fail("chord id must be a positive integer without leading zeros");
  int id = 0;
  auto [ptr, ec] = std::from_chars(tok.data() + i, tok.data() + j, id);
  if (ec != std::errc() || ptr != tok.data() + j) throw fail("chord id out of range");
  if (pre) {
    if (j != tok.size()) throw fail("trailing characters after precrossing id");
    return {{id, role}, ChordKind::precrossing()};
  }
  if (j + 1 != tok.size() || (tok[j] != '+' && tok[j] != '-'))
    throw fail("classical token must end in + or -");
  return {{id, role}, ChordKind::classical(tok[j] == '+' ? 1 : -1)};
}

void append_token(std::string& out, const Endpoint& e, ChordKind k, int label) {
  if (k.is_precrossing()) {
    out += e.role == Role::tail ? "Po" : "Pu";
    out += std::to_string(label);
  } else {
    out += e.role == Role::tail ? 'O' : 'U';
    out += std::to_string(label);
    out += k.sign() > 0 ? '+' : '-';
  }
}

// Partner position of every position (the other endpoint of its chord).
std::vector<std::size_t> partners(const GaussDiagram& d) {
  std::vector<std::size_t> out(d.length());
  for (const auto& [id, k] : d.chords()) {
    const auto& p = d.positions(id);
    out[p[0]] = p[1];
    out[p[1]] = p[0];
  }
  return out;
}

// Serialization of the rotation starting at `start`, relabeled by first
// occurrence.
std::string rotation_code(const GaussDiagram& d, std::size_t start) {
  const std::size_t n = d.length();
  std::map<int, int> label;
  std::string out;
  for (std::size_t k = 0; k < n; ++k) {
    const auto& e = d.word()[(start + k) % n];
    auto [it, fresh] = label.try_emplace(e.chord, static_cast<int>(label.size()) + 1);
    if (k) out += ' ';
    append_token(out, e, d.kind(e.chord), it->second);
  }
  return out;
}

}  // namespace

GaussDiagram parse_gauss_code(std::string_view text) {
  std::vector<Endpoint> word;
  std::map<int, ChordKind> chords;
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (true) {
    std::size_t next = text.find(' ', pos);
    std::string_view tok = text.substr(pos, next == std::string_view::npos ? text.size() - pos : next - pos);
    Token t = parse_token(tok);
    auto [it, fresh] = chords.try_emplace(t.endpoint.chord, t.kind);
    if (!fresh && it->second != t.kind) {
      if (it->second.is_precrossing() != t.kind.is_precrossing())
        throw ValidationError("chord " + std::to_string(t.endpoint.chord) +
                              " mixes classical and precrossing tokens");
      throw ValidationError("sign mismatch on chord " + std::to_string(t.endpoint.chord));
    }
    word.push_back(t.endpoint);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return GaussDiagram(std::move(word), std::move(chords));
}

std::string format_gauss_code(const GaussDiagram& d) {
  std::string out;
  for (std::size_t i = 0; i < d.length(); ++i) {
    const auto& e = d.word()[i];
    if (i) out += ' ';
    append_token(out, e, d.kind(e.chord), e.chord);
  }
  return out;
}

std::string canonical_code(const GaussDiagram& d) {
  if (d.empty()) return {};
  std::string best = rotation_code(d, 0);
  for (std::size_t s = 1; s < d.length(); ++s) best = std::min(best, rotation_code(d, s));
  return best;
}

std::string canonical_key(const GaussDiagram& d) {
  const std::size_t n = d.length();
  if (n == 0) return {};
  const auto partner = partners(d);
  std::vector<std::uint8_t> code(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& e = d.word()[i];
    const auto k = d.kind(e.chord);
    code[i] = static_cast<std::uint8_t>((e.role == Role::tail ? 0 : 4) +
                                        (k.is_precrossing() ? 2 : (k.sign() > 0 ? 0 : 1)));
  }
  // Two bytes per token: first-occurrence label, then role/kind code.
  std::basic_string<std::uint8_t> best;
  std::basic_string<std::uint8_t> cur(2 * n, 0);
  std::vector<std::uint8_t> label(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::uint8_t next_label = 1;
    bool worse = false, better = best.empty();
    for (std::size_t k = 0; k < n && !worse; ++k) {
      std::size_t p = (s + k) % n;
      std::size_t q = partner[p];
      std::size_t kq = (q + n - s) % n;
      std::uint8_t l = kq > k ? (label[p] = next_label++) : label[q];
      cur[2 * k] = l;
      cur[2 * k + 1] = code[p];
      for (std::size_t b = 2 * k; b < 2 * k + 2 && !better; ++b) {
        if (cur[b] < best[b]) better = true;
        else if (cur[b] > best[b]) { worse = true; break; }
      }
    }
    if (!worse && better) best = cur;
  }
  return std::string(best.begin(), best.end());
}

GaussDiagram canonical_form(const GaussDiagram& d) {
  return parse_gauss_code(canonical_code(d));
}

namespace {

GaussDiagram flip_chord(const GaussDiagram& d, int chord, ChordKind new_kind) {
  auto word = d.word();
  for (auto& e : word)
    if (e.chord == chord) e.role = opposite(e.role);
  auto chords = d.chords();
  chords.at(chord) = new_kind;
  return GaussDiagram(std::move(word), std::move(chords));
}

}  // namespace

GaussDiagram resolve(const GaussDiagram& d, int chord, int sign) {
  if (!d.kind(chord).is_precrossing())
    throw NotAPrecrossing("chord " + std::to_string(chord) + " is not a precrossing");
  if (sign == 1) {
    auto chords = d.chords();
    chords.at(chord) = ChordKind::classical(1);
    return GaussDiagram(d.word(), std::move(chords));
  }
  if (sign != -1) throw ValidationError("resolution sign must be +1 or -1");
  return flip_chord(d, chord, ChordKind::classical(-1));
}

GaussDiagram resolve_all(const GaussDiagram& d, const std::vector<int>& signs) {
  const auto pre = d.precrossing_chords();
  if (signs.size() != pre.size()) throw ValidationError("one sign per precrossing required");
  GaussDiagram out = d;
  for (std::size_t i = 0; i < pre.size(); ++i) out = resolve(out, pre[i], signs[i]);
  return out;
}

std::vector<GaussDiagram> all_resolutions(const GaussDiagram& d) {
  const auto pre = d.precrossing_chords();
  const std::size_t p = pre.size();
  std::vector<GaussDiagram> out;
  out.reserve(std::size_t{1} << p);
  // Bit (p-1-i) set means chord pre[i] resolves negatively; counting upward
  // gives lexicographic order with + before -.
  for (std::size_t mask = 0; mask < (std::size_t{1} << p); ++mask) {
    std::vector<int> signs(p);
    for (std::size_t i = 0; i < p; ++i) signs[i] = (mask >> (p - 1 - i)) & 1 ? -1 : 1;
    out.push_back(resolve_all(d, signs));
  }
  return out;
}

GaussDiagram crossing_change(const GaussDiagram& d, int chord) {
  auto k = d.kind(chord);
  if (!k.is_classical())
    throw NotClassical("chord " + std::to_string(chord) + " is a precrossing");
  return flip_chord(d, chord, ChordKind::classical(-k.sign()));
}

bool chords_interleave(const GaussDiagram& d, int a, int b) {
  if (a == b) throw InvalidOperation("a chord does not interleave with itself");
  const auto& pa = d.positions(a);
  const auto& pb = d.positions(b);
  auto lo = std::min(pa[0], pa[1]), hi = std::max(pa[0], pa[1]);
  auto inside = [&](std::size_t p) { return p > lo && p < hi; };
  return inside(pb[0]) != inside(pb[1]);
}

}  // namespace pk
