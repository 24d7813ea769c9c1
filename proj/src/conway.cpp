#include "pseudoknot/conway.hpp"

#include <array>
#include <cctype>

namespace pk {

namespace {

// Which strand a positive entry puts on top, in both horizontal and vertical
// twists. Fixed so that (1,1,1) is the positive trefoil.
constexpr int kPositiveOverStrand = 1;

enum Slot { NE = 0, NW = 1, SW = 2, SE = 3 };

class Parser {
 public:
  explicit Parser(std::string_view t) : text_(t) {}

  ConwayExpr parse() {
    ConwayExpr e;
    skip_space();
    if (pos_ == text_.size()) throw EmptyExpr("empty Conway expression");
    while (pos_ < text_.size()) {
      e.terms.push_back(term());
      skip_space();
    }
    return e;
  }

 private:
  std::vector<ConwayEntry> term() {
    std::vector<ConwayEntry> out;
    if (peek() != '(') {
      integer(out);
      return out;
    }
    ++pos_;
    for (;;) {
      skip_space();
      if (peek() == 'i') {
        ++pos_;
        out.push_back(ConwayEntry::precrossing);
      } else {
        integer(out);
      }
      skip_space();
      char c = peek();
      ++pos_;
      if (c == ')') return out;
      if (c != ',') fail("expected ',' or ')'");
    }
  }

  void integer(std::vector<ConwayEntry>& out) {
    bool negative = false;
    if (peek() == '-') {
      negative = true;
      ++pos_;
    }
    std::size_t start = pos_;
    long n = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      n = n * 10 + (text_[pos_++] - '0');
      if (n > 10000) fail("integer too large");
    }
    if (pos_ == start) fail("expected an integer");
    if (n == 0) fail("zero twist");
    out.insert(out.end(), static_cast<std::size_t>(n), negative ? ConwayEntry::negative : ConwayEntry::positive);
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("Conway notation, column " + std::to_string(pos_ + 1) + ": " + what);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// A tangle under construction. A port holds either a vertex slot (4v+s) or,
// for the initial crossingless tangle, -1-j: a bare arc to port j.
class TangleBuilder {
 public:
  explicit TangleBuilder(bool start_horizontal) {
    if (start_horizontal) {
      port_ = {direct(NW), direct(NE), direct(SE), direct(SW)};  // 0-tangle
    } else {
      port_ = {direct(SE), direct(SW), direct(NW), direct(NE)};  // infinity tangle
    }
  }

  void twist(bool horizontal, ConwayEntry entry, int term, int index) {
    PlanarVertex v;
    v.precrossing = entry == ConwayEntry::precrossing;
    v.over_strand = entry == ConwayEntry::negative ? 1 - kPositiveOverStrand : kPositiveOverStrand;
    v.term = term;
    v.entry = index;
    const int c = static_cast<int>(p_.vertices.size());
    p_.vertices.push_back(v);
    p_.link.resize(p_.link.size() + 4, -1);
    if (horizontal) {
      join(NE, 4 * c + NW);
      join(SE, 4 * c + SW);
      port_[NE] = 4 * c + NE;
      port_[SE] = 4 * c + SE;
    } else {
      join(SW, 4 * c + NW);
      join(SE, 4 * c + NE);
      port_[SW] = 4 * c + SW;
      port_[SE] = 4 * c + SE;
    }
  }

  PlanarPseudodiagram close() {
    close_pair(NW, NE);
    close_pair(SW, SE);
    return std::move(p_);
  }

 private:
  static int direct(int j) { return -1 - j; }

  void link(int a, int b) {
    p_.link[static_cast<std::size_t>(a)] = b;
    p_.link[static_cast<std::size_t>(b)] = a;
  }

  void join(int port, int slot) {
    int v = port_[port];
    if (v >= 0) link(v, slot);
    else port_[-1 - v] = slot;
  }

  void close_pair(int a, int b) {
    if (port_[a] < 0 || port_[b] < 0) throw MultiComponent("closure contains a free loop");
    link(port_[a], port_[b]);
  }

  std::array<int, 4> port_{};
  PlanarPseudodiagram p_;
};

struct Passage {
  int vertex;
  int exit;
};

std::vector<Passage> trace(const PlanarPseudodiagram& p) {
  std::vector<Passage> out;
  if (p.vertices.empty()) return out;
  Passage cur{0, SW};
  do {
    out.push_back(cur);
    int next = p.link.at(static_cast<std::size_t>(4 * cur.vertex + cur.exit));
    cur = {next / 4, (next % 4 + 2) % 4};
  } while ((cur.vertex != 0 || cur.exit != SW) && out.size() <= 2 * p.vertices.size());
  if (out.size() != 2 * p.vertices.size()) throw MultiComponent("diagram has more than one component");
  return out;
}

}  // namespace

std::size_t ConwayExpr::entry_count() const {
  std::size_t n = 0;
  for (const auto& t : terms) n += t.size();
  return n;
}

ConwayExpr parse_conway(std::string_view text) { return Parser(text).parse(); }

std::string format_conway(const ConwayExpr& e) {
  std::string out;
  for (const auto& t : e.terms) {
    if (!out.empty()) out += ' ';
    out += '(';
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += ',';
      out += t[i] == ConwayEntry::precrossing ? "i" : t[i] == ConwayEntry::positive ? "1" : "-1";
    }
    out += ')';
  }
  return out;
}

PlanarPseudodiagram build_pseudodiagram(const ConwayExpr& e) {
  if (e.terms.empty()) throw EmptyExpr("empty Conway expression");
  const std::size_t n = e.terms.size();
  // Terms alternate, the last one horizontal.
  auto horizontal = [&](std::size_t k) { return (n - 1 - k) % 2 == 0; };
  TangleBuilder b(horizontal(0));
  for (std::size_t k = 0; k < n; ++k) {
    if (e.terms[k].empty()) throw ParseError("empty twist vector");
    for (std::size_t j = 0; j < e.terms[k].size(); ++j)
      b.twist(horizontal(k), e.terms[k][j], static_cast<int>(k), static_cast<int>(j));
  }
  auto p = b.close();
  trace(p);
  return p;
}

GaussDiagram pd_to_gauss(const PlanarPseudodiagram& p) {
  const auto passages = trace(p);
  // exits[v] = {exit of first passage, exit of second passage}
  std::vector<std::array<int, 2>> exits(p.vertices.size(), {-1, -1});
  for (const auto& q : passages) {
    auto& e = exits[static_cast<std::size_t>(q.vertex)];
    e[e[0] < 0 ? 0 : 1] = q.exit;
  }

  std::vector<Endpoint> word;
  std::map<int, ChordKind> chords;
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    const auto& pv = p.vertices[v];
    const auto& e = exits[v];
    const int id = static_cast<int>(v) + 1;
    if (pv.precrossing) {
      chords.emplace(id, ChordKind::precrossing());
    } else {
      int over = e[0] % 2 == pv.over_strand ? e[0] : e[1];
      int under = over == e[0] ? e[1] : e[0];
      chords.emplace(id, ChordKind::classical(under == (over + 1) % 4 ? 1 : -1));
    }
  }
  for (const auto& q : passages) {
    const auto& pv = p.vertices[static_cast<std::size_t>(q.vertex)];
    const auto& e = exits[static_cast<std::size_t>(q.vertex)];
    const int other = e[0] == q.exit ? e[1] : e[0];
    bool tail;
    if (pv.precrossing) tail = other == (q.exit + 1) % 4;
    else tail = q.exit % 2 == pv.over_strand;
    word.push_back({q.vertex + 1, tail ? Role::tail : Role::head});
  }
  return GaussDiagram(std::move(word), std::move(chords));
}

GaussDiagram conway_to_gauss(std::string_view text) { return pd_to_gauss(build_pseudodiagram(parse_conway(text))); }

}  // namespace pk
