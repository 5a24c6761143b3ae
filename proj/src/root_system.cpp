#include "charvar/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "charvar/errors.hpp"
#include "charvar/intlinalg.hpp"

namespace charvar {

std::string SimpleTypeRank::to_string() const { return family + std::to_string(rank); }

void validate_type(const SimpleTypeRank& tr) {
  const int n = tr.rank;
  switch (tr.family) {
    case 'A':
      if (n >= 1) return;
      throw ValidationError("type A requires rank >= 1");
    case 'B':
    case 'C':
      if (n >= 2) return;
      throw ValidationError(std::string("type ") + tr.family + " requires rank >= 2 (B1 = C1 = A1)");
    case 'D':
      if (n >= 4) return;
      throw ValidationError("type D requires rank >= 4 (D2 = A1 x A1 and D3 = A3 are excluded)");
    case 'E':
      if (n >= 6 && n <= 8) return;
      throw ValidationError("type E requires rank in {6, 7, 8}");
    case 'F':
      if (n == 4) return;
      throw ValidationError("type F requires rank 4");
    case 'G':
      if (n == 2) return;
      throw ValidationError("type G requires rank 2");
    default:
      throw ValidationError(std::string("unknown family '") + tr.family + "'");
  }
}

SimpleTypeRank parse_type(const std::string& family, int rank) {
  if (family.size() != 1) throw ValidationError("family must be a single letter A..G");
  SimpleTypeRank tr{family[0], rank};
  validate_type(tr);
  return tr;
}

long positive_count_closed_form(const SimpleTypeRank& tr) {
  const long n = tr.rank;
  switch (tr.family) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return tr.rank == 6 ? 36 : (tr.rank == 7 ? 63 : 120);
    case 'F': return 24;
    case 'G': return 6;
  }
  throw ValidationError("unknown family");
}

std::vector<std::vector<int>> cartan_matrix(const SimpleTypeRank& tr) {
  validate_type(tr);
  const int n = tr.rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto bond = [&](int i, int j) { c[i][j] = c[j][i] = -1; };
  switch (tr.family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) bond(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) bond(i, i + 1);
      bond(n - 3, n - 1);
      break;
    case 'E':
      bond(0, 2);
      bond(1, 3);
      for (int i = 2; i + 1 < n; ++i) bond(i, i + 1);
      break;
    case 'F':
      bond(0, 1);
      bond(1, 2);
      bond(2, 3);
      c[1][2] = -2;  // alpha_1, alpha_2 long
      break;
    case 'G':
      c[0][1] = -1;
      c[1][0] = -3;  // alpha_1 short
      break;
  }
  return c;
}

std::vector<int> cartan_symmetrizer(const SimpleTypeRank& tr) {
  validate_type(tr);
  const int n = tr.rank;
  std::vector<int> d(n, 1);
  switch (tr.family) {
    case 'B':
      for (int i = 0; i < n - 1; ++i) d[i] = 2;
      break;
    case 'C':
      d[n - 1] = 2;
      break;
    case 'F':
      d[0] = d[1] = 2;
      break;
    case 'G':
      d[1] = 3;
      break;
    default:
      break;
  }
  return d;
}

long RootSystem::pairing_with_simple_coroot(const Root& beta, int j) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) s += static_cast<long>(beta[i]) * cartan[i][j];
  return s;
}

long RootSystem::inner(const Root& x, const Root& y) const {
  long s = 0;
  for (int i = 0; i < rank(); ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < rank(); ++j)
      s += static_cast<long>(x[i]) * y[j] * cartan[i][j] * symmetrizer[j];
  }
  return s;
}

long RootSystem::pairing_with_coroot(const Root& x, const Root& beta) const {
  const long num = 2 * inner(x, beta);
  const long den = inner(beta, beta);
  if (num % den != 0) throw InvariantViolation("coroot pairing is not integral");
  return num / den;
}

RootSystem build_root_system(const SimpleTypeRank& tr) {
  validate_type(tr);
  RootSystem rs;
  rs.typerank = tr;
  rs.cartan = cartan_matrix(tr);
  rs.symmetrizer = cartan_symmetrizer(tr);
  const int n = tr.rank;

  std::set<Root> seen;
  std::deque<Root> frontier;
  for (int i = 0; i < n; ++i) {
    Root e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    Root beta = frontier.front();
    frontier.pop_front();
    for (int j = 0; j < n; ++j) {
      long p = rs.pairing_with_simple_coroot(beta, j);
      if (p == 0) continue;
      Root gamma = beta;
      gamma[j] -= static_cast<int>(p);
      if (seen.insert(gamma).second) frontier.push_back(gamma);
    }
  }
  rs.all_roots.assign(seen.begin(), seen.end());
  for (const Root& r : rs.all_roots) {
    bool nonneg = std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
    if (nonneg) rs.positive.push_back(r);
  }
  if (2 * rs.positive.size() != rs.all_roots.size())
    throw InvariantViolation("root closure: positive roots are not half of all roots");
  return rs;
}

std::vector<Root> positive_roots(const RootSystem& rs) { return rs.positive; }

Root highest_root(const RootSystem& rs) {
  const Root* best = nullptr;
  long best_h = -1;
  for (const Root& r : rs.positive) {
    long h = std::accumulate(r.begin(), r.end(), 0L);
    if (h > best_h) {
      best_h = h;
      best = &r;
    }
  }
  return *best;
}

ExtendedDiagram extended_diagram(const RootSystem& rs) {
  ExtendedDiagram ed;
  ed.base = rs;
  Root theta = highest_root(rs);
  ed.affine_node.resize(rs.rank());
  for (int i = 0; i < rs.rank(); ++i) ed.affine_node[i] = -theta[i];
  for (int i = 0; i < rs.rank(); ++i) {
    Root e(rs.rank(), 0);
    e[i] = 1;
    ed.nodes.push_back(e);
  }
  ed.nodes.push_back(ed.affine_node);
  const int m = rs.rank() + 1;
  ed.ext_cartan.assign(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      ed.ext_cartan[i][j] = static_cast<int>(rs.pairing_with_coroot(ed.nodes[i], ed.nodes[j]));

  IntMat ext(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) ext.at(i, j) = ed.ext_cartan[i][j];
  if (determinant(ext) != 0)
    throw InvariantViolation("extended Cartan matrix must be singular");
  return ed;
}

namespace {

SimpleTypeRank classify_connected(const std::vector<std::vector<int>>& c,
                                  const std::vector<int>& nodes) {
  const int n = static_cast<int>(nodes.size());
  if (n == 1) return {'A', 1};

  struct Edge {
    int u, v, mult;  // oriented so that c[u][v] <= c[v][u], i.e. v is the shorter end
  };
  std::vector<Edge> edges;
  std::vector<int> degree(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      int cab = c[nodes[a]][nodes[b]], cba = c[nodes[b]][nodes[a]];
      if (cab == 0) continue;
      int mult = cab * cba;
      if (mult < 1 || mult > 3)
        throw InvariantViolation("diagram classification: unexpected bond multiplicity");
      if (cab <= cba)
        edges.push_back({a, b, mult});
      else
        edges.push_back({b, a, mult});
      ++degree[a];
      ++degree[b];
    }
  if (static_cast<int>(edges.size()) != n - 1)
    throw InvariantViolation("diagram classification: connected diagram is not a tree");

  int triple = 0, dbl = 0;
  const Edge* dbl_edge = nullptr;
  for (const Edge& e : edges) {
    if (e.mult == 3) ++triple;
    if (e.mult == 2) {
      ++dbl;
      dbl_edge = &e;
    }
  }
  if (triple > 0) {
    if (n == 2 && triple == 1 && dbl == 0) return {'G', 2};
    throw InvariantViolation("diagram classification: malformed triple bond");
  }

  int maxdeg = *std::max_element(degree.begin(), degree.end());
  if (dbl > 1) throw InvariantViolation("diagram classification: more than one double bond");
  if (dbl == 1) {
    if (maxdeg > 2) throw InvariantViolation("diagram classification: double bond on a fork");
    if (n == 2) return {'C', 2};  // B2 = C2, reported as C2
    bool short_end_is_leaf = degree[dbl_edge->v] == 1;
    bool long_end_is_leaf = degree[dbl_edge->u] == 1;
    if (short_end_is_leaf) return {'B', n};
    if (long_end_is_leaf) return {'C', n};
    if (n == 4) return {'F', 4};
    throw InvariantViolation("diagram classification: interior double bond outside F4");
  }

  // All bonds single.
  if (maxdeg <= 2) return {'A', n};
  if (maxdeg > 3) throw InvariantViolation("diagram classification: node of degree > 3");
  int center = static_cast<int>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
  if (std::count(degree.begin(), degree.end(), 3) != 1)
    throw InvariantViolation("diagram classification: more than one fork");

  // Arm lengths from the fork.
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<int> arms;
  for (int start : adj[center]) {
    int len = 1, prev = center, cur = start;
    while (true) {
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', n};
  if (arms == std::vector<int>{1, 2, 2}) return {'E', 6};
  if (arms == std::vector<int>{1, 2, 3}) return {'E', 7};
  if (arms == std::vector<int>{1, 2, 4}) return {'E', 8};
  throw InvariantViolation("diagram classification: unrecognized fork shape");
}

}  // namespace

std::vector<SimpleTypeRank> classify_diagram(const std::vector<std::vector<int>>& pairings) {
  const int n = static_cast<int>(pairings.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp[i] >= 0) continue;
    std::deque<int> q{i};
    comp[i] = ncomp;
    while (!q.empty()) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < n; ++v)
        if (comp[v] < 0 && pairings[u][v] != 0) {
          comp[v] = ncomp;
          q.push_back(v);
        }
    }
    ++ncomp;
  }
  std::vector<SimpleTypeRank> out;
  for (int k = 0; k < ncomp; ++k) {
    std::vector<int> nodes;
    for (int i = 0; i < n; ++i)
      if (comp[i] == k) nodes.push_back(i);
    out.push_back(classify_connected(pairings, nodes));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace charvar
