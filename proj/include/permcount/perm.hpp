#pragma once
#include <array>
#include <cctype>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace permcount {

inline constexpr int max_degree = 16;  // images pack into 4 bits each

/*
 * A permutation of {1..n}, n <= 16, as a value type.  Composition is
 * (a.b)(x) = a(b(x)): the right factor acts first.  Points are 1-based in
 * the public interface; storage is 0-based with identity padding above n.
 */
class Perm {
  std::uint8_t n_;
  std::array<std::uint8_t, max_degree> img_;

  static void check_degree(int n) {
    if (n < 1 || n > max_degree)
      throw std::invalid_argument("degree must be in 1.." + std::to_string(max_degree));
  }

 public:
  explicit Perm(int n) : n_(static_cast<std::uint8_t>(n)) {
    check_degree(n);
    for (int x = 0; x < max_degree; ++x) img_[x] = static_cast<std::uint8_t>(x);
  }

  static Perm identity(int n) { return Perm(n); }

  // one-line notation, images[x-1] = sigma(x), 1-based values
  static Perm from_one_line(const std::vector<int>& images) {
    check_degree(static_cast<int>(images.size()));
    Perm p(static_cast<int>(images.size()));
    std::uint32_t seen = 0;
    for (size_t x = 0; x < images.size(); ++x) {
      int y = images[x];
      if (y < 1 || y > static_cast<int>(images.size()) || (seen >> (y - 1)) & 1)
        throw std::invalid_argument("not a permutation in one-line notation");
      seen |= 1u << (y - 1);
      p.img_[x] = static_cast<std::uint8_t>(y - 1);
    }
    return p;
  }

  static Perm transposition(int n, int a, int b) {
    check_degree(n);
    if (a < 1 || b < 1 || a > n || b > n || a == b)
      throw std::invalid_argument("transposition needs two distinct points in 1..n");
    Perm p(n);
    p.img_[a - 1] = static_cast<std::uint8_t>(b - 1);
    p.img_[b - 1] = static_cast<std::uint8_t>(a - 1);
    return p;
  }

  // single cycle (p1 p2 ... pk) inside S_n
  static Perm cycle(int n, const std::vector<int>& pts) {
    Perm p(n);
    std::uint32_t seen = 0;
    for (int q : pts) {
      if (q < 1 || q > n || (seen >> (q - 1)) & 1)
        throw std::invalid_argument("bad cycle");
      seen |= 1u << (q - 1);
    }
    for (size_t t = 0; t < pts.size(); ++t)
      p.img_[pts[t] - 1] = static_cast<std::uint8_t>(pts[(t + 1) % pts.size()] - 1);
    return p;
  }

  int degree() const { return n_; }
  int operator()(int x) const { return img_[x - 1] + 1; }  // 1-based
  std::uint8_t at0(int x0) const { return img_[x0]; }      // 0-based, hot loops
  void set0(int x0, std::uint8_t y0) { img_[x0] = y0; }

  bool operator==(const Perm& o) const { return n_ == o.n_ && img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }

  bool is_identity() const {
    for (int x = 0; x < n_; ++x)
      if (img_[x] != x) return false;
    return true;
  }

  // 4 bits per image: unique key for fixed degree
  std::uint64_t pack() const {
    std::uint64_t key = 0;
    for (int x = 0; x < n_; ++x) key |= static_cast<std::uint64_t>(img_[x]) << (4 * x);
    return key;
  }
};

inline Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  Perm r(a.degree());
  for (int x = 0; x < a.degree(); ++x) r.set0(x, a.at0(b.at0(x)));
  return r;
}

inline Perm inverse(const Perm& p) {
  Perm r(p.degree());
  for (int x = 0; x < p.degree(); ++x) r.set0(p.at0(x), static_cast<std::uint8_t>(x));
  return r;
}

inline Perm conjugate(const Perm& p, const Perm& by) {
  return compose(by, compose(p, inverse(by)));
}

inline int cycle_count(const Perm& p) {
  std::uint32_t seen = 0;
  int c = 0;
  for (int s = 0; s < p.degree(); ++s) {
    if ((seen >> s) & 1) continue;
    ++c;
    for (int x = s; !((seen >> x) & 1); x = p.at0(x)) seen |= 1u << x;
  }
  return c;
}

inline int reflection_length(const Perm& p) { return p.degree() - cycle_count(p); }

// cycles in canonical form: each starts at its least point, listed by least point
inline std::vector<std::vector<int>> cycles(const Perm& p) {
  std::vector<std::vector<int>> out;
  std::uint32_t seen = 0;
  for (int s = 0; s < p.degree(); ++s) {
    if ((seen >> s) & 1) continue;
    std::vector<int> c;
    for (int x = s; !((seen >> x) & 1); x = p.at0(x)) {
      seen |= 1u << x;
      c.push_back(x + 1);
    }
    out.push_back(std::move(c));
  }
  return out;
}

// weakly decreasing partition of n given by the cycle lengths
inline std::vector<int> cycle_type(const Perm& p) {
  std::array<int, max_degree + 1> cnt{};
  std::uint32_t seen = 0;
  for (int s = 0; s < p.degree(); ++s) {
    if ((seen >> s) & 1) continue;
    int len = 0;
    for (int x = s; !((seen >> x) & 1); x = p.at0(x)) {
      seen |= 1u << x;
      ++len;
    }
    ++cnt[len];
  }
  std::vector<int> parts;
  for (int len = p.degree(); len >= 1; --len)
    for (int i = 0; i < cnt[len]; ++i) parts.push_back(len);
  return parts;
}

inline std::vector<int> fixed_points(const Perm& p) {
  std::vector<int> out;
  for (int x = 0; x < p.degree(); ++x)
    if (p.at0(x) == x) out.push_back(x + 1);
  return out;
}

// cycle index of each point; two points are in the same cycle iff ids match
inline std::array<std::uint8_t, max_degree> cycle_ids(const Perm& p) {
  std::array<std::uint8_t, max_degree> id{};
  std::uint32_t seen = 0;
  std::uint8_t c = 0;
  for (int s = 0; s < p.degree(); ++s) {
    if ((seen >> s) & 1) continue;
    for (int x = s; !((seen >> x) & 1); x = p.at0(x)) {
      seen |= 1u << x;
      id[x] = c;
    }
    ++c;
  }
  return id;
}

// l(sigma * (a b)) = l(sigma) + 1 iff a, b lie in distinct cycles of sigma
// (the same criterion governs multiplication on either side)
inline bool in_distinct_cycles(const Perm& p, int a, int b) {
  int x = p.at0(a - 1);
  while (x != a - 1) {
    if (x == b - 1) return false;
    x = p.at0(x);
  }
  return b - 1 != a - 1;
}

/*
 * Excise the last point n from its cycle: a cycle (... i n j ...) becomes
 * (... i j ...).  Defined only when sigma moves n; drops reflection length
 * by exactly one.
 */
inline Perm delete_point(const Perm& p) {
  int n = p.degree();
  if (p.at0(n - 1) == n - 1)
    throw std::invalid_argument("deletion undefined on fixed point");
  Perm r(n - 1);
  for (int x = 0; x < n - 1; ++x) {
    std::uint8_t y = p.at0(x);
    r.set0(x, y == n - 1 ? p.at0(n - 1) : y);
  }
  return r;
}

// ---- product policies -------------------------------------------------
// All counts must be independent of which factor acts first; the engines
// are parameterized on the policy so that independence is itself testable.
struct right_to_left {  // library default: (a.b)(x) = a(b(x))
  static Perm mul(const Perm& a, const Perm& b) { return compose(a, b); }
};
struct left_to_right {
  static Perm mul(const Perm& a, const Perm& b) { return compose(b, a); }
};

// ---- text formats ------------------------------------------------------
// cycle form "(1 4 2)(3)" with fixed points omitted, "()" for the identity;
// one-line form "[4,1,3,2]"

inline std::string to_cycle_string(const Perm& p) {
  std::string out;
  for (const auto& c : cycles(p)) {
    if (c.size() == 1) continue;
    out += '(';
    for (size_t t = 0; t < c.size(); ++t) {
      if (t) out += ' ';
      out += std::to_string(c[t]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline std::string to_one_line_string(const Perm& p) {
  std::string out = "[";
  for (int x = 1; x <= p.degree(); ++x) {
    if (x > 1) out += ',';
    out += std::to_string(p(x));
  }
  return out + "]";
}

/*
 * Parse either text format.  degree: expected degree, or -1 to infer it
 * (cycle form infers the largest point mentioned; one-line form the entry
 * count).  Unmentioned points in cycle form are fixed.
 */
inline Perm parse_perm(const std::string& text, int degree = -1) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_int = [&]() -> int {
    skip_ws();
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected a point in '" + text + "'");
    return std::stoi(text.substr(start, pos - start));
  };
  skip_ws();
  if (pos >= text.size()) throw std::invalid_argument("empty permutation text");

  if (text[pos] == '[') {
    ++pos;
    std::vector<int> images;
    skip_ws();
    if (pos < text.size() && text[pos] != ']') {
      images.push_back(read_int());
      skip_ws();
      while (pos < text.size() && text[pos] == ',') {
        ++pos;
        images.push_back(read_int());
        skip_ws();
      }
    }
    if (pos >= text.size() || text[pos] != ']')
      throw std::invalid_argument("unterminated one-line notation");
    ++pos;
    skip_ws();
    if (pos != text.size()) throw std::invalid_argument("trailing text after permutation");
    if (degree >= 0 && degree != static_cast<int>(images.size()))
      throw std::invalid_argument("one-line notation has wrong degree");
    return Perm::from_one_line(images);
  }

  // cycle form: sequence of (...) groups
  std::vector<std::vector<int>> cycs;
  int max_pt = 0;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++pos;
    std::vector<int> c;
    skip_ws();
    while (pos < text.size() && text[pos] != ')') {
      c.push_back(read_int());
      if (c.back() > max_pt) max_pt = c.back();
      skip_ws();
      if (pos < text.size() && text[pos] == ',') ++pos;  // commas tolerated
    }
    if (pos >= text.size()) throw std::invalid_argument("unterminated cycle");
    ++pos;  // ')'
    if (!c.empty()) cycs.push_back(std::move(c));
  }
  skip_ws();
  int n = degree >= 0 ? degree : (max_pt > 0 ? max_pt : 1);
  if (max_pt > n) throw std::invalid_argument("cycle mentions a point beyond the degree");
  Perm p(n);
  std::uint32_t seen = 0;
  for (const auto& c : cycs) {
    for (int q : c) {
      if ((seen >> (q - 1)) & 1) throw std::invalid_argument("point repeated across cycles");
      seen |= 1u << (q - 1);
    }
    for (size_t t = 0; t < c.size(); ++t)
      p.set0(c[t] - 1, static_cast<std::uint8_t>(c[(t + 1) % c.size()] - 1));
  }
  return p;
}

}  // namespace permcount
