#include "wcde/shape.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "wcde/errors.hpp"

namespace wcde {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0 || (r && parts_[r] > parts_[r - 1]))
      throw std::invalid_argument("not a partition");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& o) const {
  if (o.length() > length()) return false;
  for (int r = 1; r <= o.length(); ++r)
    if (o.part(r) > part(r)) return false;
  return true;
}

std::string Partition::str() const {
  if (parts_.empty()) return "0";
  std::string s;
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (r) s += ',';
    s += std::to_string(parts_[r]);
  }
  return s;
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_)) throw std::invalid_argument("inner partition not contained in outer");
}

namespace {

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    parts.push_back(std::stoi(cur));
    cur.clear();
  };
  for (char ch : text) {
    if (ch >= '0' && ch <= '9')
      cur.push_back(ch);
    else if (ch == ',' || ch == ' ')
      flush();
    else
      throw ParseError("bad partition: " + std::string(text));
  }
  flush();
  try {
    return Partition(parts);
  } catch (const std::invalid_argument&) {
    throw ParseError("bad partition: " + std::string(text));
  }
}

}  // namespace

SkewShape SkewShape::parse(std::string_view text) {
  auto slash = text.find('/');
  Partition outer = parse_partition(text.substr(0, slash));
  Partition inner = slash == std::string_view::npos ? Partition() : parse_partition(text.substr(slash + 1));
  if (!outer.contains(inner)) throw ParseError("inner partition not contained in outer");
  return SkewShape(outer, inner);
}

std::vector<Box> SkewShape::boxes() const {
  std::vector<Box> out;
  for (int r = 1; r <= outer_.length(); ++r)
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) out.push_back({r, c});
  return out;
}

bool SkewShape::contains(Box b) const {
  return b.row >= 1 && b.col > inner_.part(b.row) && b.col <= outer_.part(b.row);
}

SkewShape SkewShape::normalized() const {
  std::vector<int> rows;
  std::set<int> cols;
  for (int r = 1; r <= outer_.length(); ++r) {
    if (outer_.part(r) > inner_.part(r)) rows.push_back(r);
    for (int c = inner_.part(r) + 1; c <= outer_.part(r); ++c) cols.insert(c);
  }
  std::map<int, int> cmap;
  int idx = 0;
  for (int c : cols) cmap[c] = ++idx;
  std::vector<int> lam, nu;
  for (int r : rows) {
    lam.push_back(cmap[outer_.part(r)]);
    nu.push_back(cmap[inner_.part(r) + 1] - 1);
  }
  return SkewShape(Partition(lam), Partition(nu));
}

int SkewShape::height() const {
  int h = 0;
  for (int r = 1; r <= outer_.length(); ++r)
    if (outer_.part(r) > inner_.part(r)) ++h;
  return h;
}

int SkewShape::width() const {
  std::set<int> cols;
  for (const Box& b : boxes()) cols.insert(b.col);
  return static_cast<int>(cols.size());
}

bool SkewShape::connected() const {
  if (size() == 0) return false;
  return connected_components(to_diagram(*this)).size() == 1;
}

namespace {

Partition conjugate(const Partition& p) {
  std::vector<int> c;
  for (int j = 1; j <= p.part(1); ++j) {
    int cnt = 0;
    for (int r = 1; r <= p.length(); ++r)
      if (p.part(r) >= j) ++cnt;
    c.push_back(cnt);
  }
  return Partition(c);
}

}  // namespace

SkewShape SkewShape::transpose() const { return SkewShape(conjugate(outer_), conjugate(inner_)); }

SkewShape SkewShape::rotate() const {
  SkewShape s = normalized();
  const int a = s.height(), b = s.width();
  std::vector<int> lam(a), nu(a);
  for (int r = 1; r <= a; ++r) {
    lam[a - r] = b - s.inner().part(r);
    nu[a - r] = b - s.outer().part(r);
  }
  return SkewShape(Partition(lam), Partition(nu));
}

std::string SkewShape::str() const {
  if (inner_.empty()) return outer_.str();
  return outer_.str() + "/" + inner_.str();
}

SkewShape staircase(int d) {
  std::vector<int> p;
  for (int k = d - 1; k >= 1; --k) p.push_back(k);
  return SkewShape(Partition(p), Partition());
}

SkewShape rectangle(int a, int b) { return SkewShape(Partition(std::vector<int>(a, b)), Partition()); }

Diagram::Diagram(std::vector<Box> boxes) : boxes_(std::move(boxes)) {
  std::sort(boxes_.begin(), boxes_.end());
  boxes_.erase(std::unique(boxes_.begin(), boxes_.end()), boxes_.end());
  for (const Box& b : boxes_)
    if (b.row < 1 || b.col < 1) throw std::invalid_argument("diagram coordinates must be positive");
}

bool Diagram::contains(Box b) const { return std::binary_search(boxes_.begin(), boxes_.end(), b); }

std::vector<int> Diagram::rows() const {
  std::set<int> s;
  for (const Box& b : boxes_) s.insert(b.row);
  return {s.begin(), s.end()};
}

std::vector<int> Diagram::cols() const {
  std::set<int> s;
  for (const Box& b : boxes_) s.insert(b.col);
  return {s.begin(), s.end()};
}

Diagram Diagram::transpose() const {
  std::vector<Box> t;
  for (const Box& b : boxes_) t.push_back({b.col, b.row});
  return Diagram(std::move(t));
}

Diagram to_diagram(const SkewShape& s) { return Diagram(s.boxes()); }

Diagram to_diagram(const InversionSet& s) {
  std::vector<Box> b;
  for (auto [i, j] : s.pairs()) b.push_back({i, j});
  return Diagram(std::move(b));
}

Diagram rothe_diagram(const Permutation& w) {
  std::vector<Box> b;
  for (int i = 1; i <= w.size(); ++i)
    for (int j = i + 1; j <= w.size(); ++j)
      if (w(i) > w(j)) b.push_back({i, w(j)});
  return Diagram(std::move(b));
}

std::vector<Diagram> connected_components(const Diagram& d) {
  const auto& bs = d.boxes();
  const int n = d.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::map<int, int> row_rep, col_rep;
  for (int k = 0; k < n; ++k) {
    auto [ri, rnew] = row_rep.try_emplace(bs[k].row, k);
    if (!rnew) parent[find(k)] = find(ri->second);
    auto [ci, cnew] = col_rep.try_emplace(bs[k].col, k);
    if (!cnew) parent[find(k)] = find(ci->second);
  }
  std::map<int, std::vector<Box>> groups;
  for (int k = 0; k < n; ++k) groups[find(k)].push_back(bs[k]);
  std::vector<Diagram> out;
  for (auto& [root, boxes] : groups) out.emplace_back(std::move(boxes));
  std::sort(out.begin(), out.end(),
            [](const Diagram& x, const Diagram& y) { return x.boxes().front() < y.boxes().front(); });
  return out;
}

bool verify_match(const Diagram& d, const SkewMatch& m) {
  std::vector<Box> img;
  for (const Box& b : d.boxes()) {
    auto r = m.row_perm.find(b.row);
    auto c = m.col_perm.find(b.col);
    if (r == m.row_perm.end() || c == m.col_perm.end()) return false;
    img.push_back({r->second, c->second});
  }
  std::sort(img.begin(), img.end());
  return img == m.shape.boxes();
}

std::vector<SkewShape> enumerate_skew_shapes(int height, int width, bool connected_only) {
  std::vector<SkewShape> out;
  if (height <= 0 || width <= 0) return out;
  std::vector<int> lam(height), nu(height);
  std::function<void(int)> rec = [&](int r) {
    if (r == height) {
      if (nu[height - 1] != 0) return;
      std::vector<char> covered(width + 1, 0);
      for (int k = 0; k < height; ++k)
        for (int c = nu[k] + 1; c <= lam[k]; ++c) covered[c] = 1;
      for (int c = 1; c <= width; ++c)
        if (!covered[c]) return;
      out.emplace_back(Partition(lam), Partition(nu));
      return;
    }
    int lmax = r == 0 ? width : lam[r - 1];
    int lmin = r == 0 ? width : 1;
    for (int l = lmin; l <= lmax; ++l) {
      if (connected_only && r > 0 && nu[r - 1] >= l) continue;
      int nmax = std::min(l - 1, r == 0 ? width : nu[r - 1]);
      for (int v = 0; v <= nmax; ++v) {
        if (r == height - 1 && v != 0) continue;
        lam[r] = l;
        nu[r] = v;
        rec(r + 1);
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

using Mask = std::uint64_t;

struct Profile {
  int rows = 0, cols = 0;
  std::vector<Mask> row_masks;  // over local column indices
};

std::vector<int> sorted_counts(const std::vector<Mask>& row_masks, int cols) {
  std::vector<int> rc, cc(cols, 0);
  for (Mask m : row_masks) {
    rc.push_back(std::popcount(m));
    for (int c = 0; c < cols; ++c)
      if ((m >> c) & 1U) ++cc[c];
  }
  std::sort(rc.begin(), rc.end());
  std::sort(cc.begin(), cc.end());
  rc.push_back(-1);
  rc.insert(rc.end(), cc.begin(), cc.end());
  return rc;
}

// Candidate skew shapes whose row lengths are a rearrangement of `lengths`.
void candidate_shapes(int height, int width, std::map<int, int>& remaining, std::vector<int>& lam,
                      std::vector<int>& nu, const std::vector<int>& col_counts,
                      std::vector<SkewShape>& out) {
  const int r = static_cast<int>(lam.size());
  if (r == height) {
    if (nu.back() != 0) return;
    std::vector<int> cc(width + 1, 0);
    for (int k = 0; k < height; ++k)
      for (int c = nu[k] + 1; c <= lam[k]; ++c) ++cc[c];
    std::vector<int> got(cc.begin() + 1, cc.end());
    std::sort(got.begin(), got.end());
    if (got != col_counts) return;
    out.emplace_back(Partition(lam), Partition(nu));
    return;
  }
  for (auto& [len, cnt] : remaining) {
    if (cnt == 0) continue;
    int lo = len, hi = r == 0 ? width : std::min(lam.back(), nu.back() + len);
    if (r == 0) lo = width;
    if (r == height - 1) lo = hi = len;
    if (r == 0 && r == height - 1 && len != width) continue;
    for (int l = lo; l <= hi; ++l) {
      if (l - len < 0) continue;
      if (r > 0 && (l > lam.back() || l - len > nu.back())) continue;
      --cnt;
      lam.push_back(l);
      nu.push_back(l - len);
      candidate_shapes(height, width, remaining, lam, nu, col_counts, out);
      lam.pop_back();
      nu.pop_back();
      ++cnt;
    }
  }
}

struct Matcher {
  const std::vector<Mask>& src;  // source rows, sorted by decreasing size
  const std::vector<Mask>& tgt;  // target rows
  int cols;
  std::vector<int> assign;  // src row index -> tgt row
  std::vector<char> used;
  std::vector<Mask> sig_src, sig_tgt;  // per column: bitmask of assigned target rows

  bool consistent() const {
    std::vector<Mask> a = sig_src, b = sig_tgt;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
  }

  bool run(std::size_t t) {
    if (t == src.size()) return true;
    for (std::size_t s = 0; s < tgt.size(); ++s) {
      if (used[s] || std::popcount(tgt[s]) != std::popcount(src[t])) continue;
      auto save_src = sig_src, save_tgt = sig_tgt;
      for (int c = 0; c < cols; ++c) {
        if ((src[t] >> c) & 1U) sig_src[c] |= Mask{1} << s;
        if ((tgt[s] >> c) & 1U) sig_tgt[c] |= Mask{1} << s;
      }
      if (consistent()) {
        used[s] = 1;
        assign[t] = static_cast<int>(s);
        if (run(t + 1)) return true;
        used[s] = 0;
      }
      sig_src = std::move(save_src);
      sig_tgt = std::move(save_tgt);
    }
    return false;
  }
};

}  // namespace

std::optional<SkewMatch> match_skew_shape(const Diagram& d) {
  if (d.empty()) return SkewMatch{};
  const std::vector<int> rows = d.rows(), cols = d.cols();
  const int R = static_cast<int>(rows.size()), C = static_cast<int>(cols.size());
  if (R > 64 || C > 64) throw std::invalid_argument("diagram too large for matcher");
  std::map<int, int> rix, cix;
  for (int k = 0; k < R; ++k) rix[rows[k]] = k;
  for (int k = 0; k < C; ++k) cix[cols[k]] = k;
  std::vector<Mask> masks(R, 0);
  for (const Box& b : d.boxes()) masks[rix[b.row]] |= Mask{1} << cix[b.col];

  std::vector<int> order(R);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return std::popcount(masks[x]) > std::popcount(masks[y]); });
  std::vector<Mask> src;
  for (int k : order) src.push_back(masks[k]);

  std::vector<int> counts = sorted_counts(masks, C);
  std::vector<int> col_counts(counts.begin() + R + 1, counts.end());
  std::map<int, int> remaining;
  for (Mask m : masks) ++remaining[std::popcount(m)];

  std::vector<SkewShape> cands;
  std::vector<int> lam, nu;
  candidate_shapes(R, C, remaining, lam, nu, col_counts, cands);
  std::sort(cands.begin(), cands.end());

  for (const SkewShape& s : cands) {
    std::vector<Mask> tgt(R, 0);
    for (const Box& b : s.boxes()) tgt[b.row - 1] |= Mask{1} << (b.col - 1);
    Matcher m{src, tgt, C, std::vector<int>(R, -1), std::vector<char>(R, 0),
              std::vector<Mask>(C, 0), std::vector<Mask>(C, 0)};
    if (!m.run(0)) continue;
    SkewMatch out;
    out.shape = s;
    for (int t = 0; t < R; ++t) out.row_perm[rows[order[t]]] = m.assign[t] + 1;
    std::vector<std::pair<Mask, int>> a, b;
    for (int c = 0; c < C; ++c) {
      a.push_back({m.sig_src[c], c});
      b.push_back({m.sig_tgt[c], c});
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    for (int k = 0; k < C; ++k) out.col_perm[cols[a[k].second]] = b[k].second + 1;
    if (!verify_match(d, out)) throw std::logic_error("matcher produced an invalid match");
    return out;
  }
  return std::nullopt;
}

std::optional<SkewShape> skew_vexillary_shape(const Permutation& w) {
  auto m = match_skew_shape(rothe_diagram(w));
  if (!m) return std::nullopt;
  return m->shape;
}

namespace {

void tally(const Permutation& w, CensusCounts& c) {
  PermClass k = classify(w);
  ++c.total;
  c.vexillary += k.vexillary;
  c.grassmannian += k.grassmannian;
  c.inverse_grassmannian += k.inverse_grassmannian;
  c.dominant += k.dominant;
  c.fully_commutative += k.fully_commutative;
  auto s = skew_vexillary_shape(w);
  if (s) {
    ++c.skew_vexillary;
    if (s->connected() && is_balanced(*s)) ++c.connected_balanced;
  }
}

}  // namespace

CensusCounts census_serial(int n) {
  CensusCounts c;
  c.n = n;
  for (const Permutation& w : all_permutations(n)) tally(w, c);
  return c;
}

CensusCounts census(int n) {
  const auto total = static_cast<long long>(factorial(n));
  std::uint64_t t = 0, sv = 0, vx = 0, gr = 0, ig = 0, dom = 0, fc = 0, cb = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : t, sv, vx, gr, ig, dom, fc, cb)
  for (long long k = 0; k < total; ++k) {
    CensusCounts c;
    tally(Permutation::unrank(n, static_cast<std::uint64_t>(k)), c);
    t += c.total;
    sv += c.skew_vexillary;
    vx += c.vexillary;
    gr += c.grassmannian;
    ig += c.inverse_grassmannian;
    dom += c.dominant;
    fc += c.fully_commutative;
    cb += c.connected_balanced;
  }
  return CensusCounts{n, t, sv, vx, gr, ig, dom, fc, cb};
}

std::vector<std::pair<int, int>> outward_corners(const SkewShape& sigma) {
  SkewShape s = sigma.normalized();
  const int a = s.height(), b = s.width();
  std::vector<std::pair<int, int>> out;
  for (int r = 0; r <= a; ++r)
    for (int c = 0; c <= b; ++c) {
      int occ = s.contains({r, c}) + s.contains({r, c + 1}) + s.contains({r + 1, c}) +
                s.contains({r + 1, c + 1});
      if (occ == 3) out.emplace_back(r, c);
    }
  return out;
}

bool is_balanced(const SkewShape& sigma) {
  if (!sigma.connected()) throw DisconnectedShape(sigma.str());
  SkewShape s = sigma.normalized();
  const long a = s.height(), b = s.width();
  for (auto [r, c] : outward_corners(s))
    if (b * r + a * c != a * b) return false;
  return true;
}

SkewShape blowup(const SkewShape& sigma, int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("blowup factors must be positive");
  std::vector<int> lam, nu;
  for (int r = 1; r <= sigma.outer().length(); ++r)
    for (int k = 0; k < a; ++k) {
      lam.push_back(sigma.outer().part(r) * b);
      nu.push_back(sigma.inner().part(r) * b);
    }
  return SkewShape(Partition(lam), Partition(nu));
}

std::vector<SkewShape> enumerate_balanced(int a, int b) {
  const int m = std::gcd(a, b);
  std::vector<SkewShape> out;
  for (const SkewShape& core : enumerate_skew_shapes(m, m, true)) {
    if (!is_balanced(core)) continue;
    SkewShape s = blowup(core, a / m, b / m);
    if (!is_balanced(s)) throw std::logic_error("blow-up of a balanced core is not balanced");
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::vector<Box>> cross_saturation(const Diagram& d, Box box) {
  if (!d.contains(box))
    throw BoxNotInDiagram("(" + std::to_string(box.row) + "," + std::to_string(box.col) + ")");
  std::vector<int> rmates, cmates;
  for (const Box& b : d.boxes()) {
    if (b.row == box.row) rmates.push_back(b.col);
    if (b.col == box.col) cmates.push_back(b.row);
  }
  std::vector<Box> out;
  for (int i : cmates)
    for (int j : rmates) {
      if (!d.contains({i, j})) return std::nullopt;
      out.push_back({i, j});
    }
  std::sort(out.begin(), out.end());
  return out;
}

RookCoefficients balanced_rook_coefficients(const SkewShape& sigma) {
  SkewShape s = sigma.normalized();
  if (!s.connected() || !is_balanced(s)) throw NotBalanced(sigma.str());
  const long a = s.height(), b = s.width(), m = std::gcd(a, b);
  const long ap = a / m, bp = b / m, X = a + b - a * b / m;
  RookCoefficients c;
  for (long t = 1; t <= m; ++t) {
    const long r0 = (m - t) * ap, c0 = (t - 1) * bp;
    for (long p = 1; p <= ap; ++p)
      for (long q = 1; q <= bp; ++q) {
        long v = 0;
        if (p == ap && q == bp)
          v = X;
        else if (p == ap)
          v = a;
        else if (q == bp)
          v = b;
        if (v != 0) c[{static_cast<int>(r0 + p), static_cast<int>(c0 + q)}] = v;
      }
  }
  std::string err = check_rook_coefficients(s, c);
  if (!err.empty()) throw std::logic_error("rook placement failed: " + err);
  return c;
}

std::string check_rook_coefficients(const SkewShape& sigma, const RookCoefficients& c) {
  SkewShape s = sigma.normalized();
  const long a = s.height(), b = s.width();
  Diagram d = to_diagram(s);
  std::map<int, long> rows, cols;
  long total = 0;
  for (auto [box, v] : c) {
    if (!d.contains(box)) return "coefficient outside the shape";
    if (v != 0 && !cross_saturation(d, box)) return "coefficient on a box that is not cross-saturated";
    rows[box.row] += v;
    cols[box.col] += v;
    total += v;
  }
  for (int r : d.rows())
    if (rows[r] != b) return "row " + std::to_string(r) + " does not sum to b";
  for (int col : d.cols())
    if (cols[col] != a) return "column " + std::to_string(col) + " does not sum to a";
  if (total != a * b) return "total is not ab";
  return {};
}

RookCoefficients transport(const RookCoefficients& c, const SkewMatch& m) {
  std::map<int, int> rinv, cinv;
  for (auto [src, dst] : m.row_perm) rinv[dst] = src;
  for (auto [src, dst] : m.col_perm) cinv[dst] = src;
  RookCoefficients out;
  for (auto [box, v] : c) out[{rinv.at(box.row), cinv.at(box.col)}] = v;
  return out;
}

}  // namespace wcde
