// Dominating sets exactly as the proofs write them, in the proofs' own
// vertex names, translated to this library's ids by a per-family map.

#include <functional>

#include "mgdom/error.hpp"
#include "mgdom/theorems.hpp"

namespace mgdom {

namespace {

[[noreturn]] void not_transcribed(const std::string& what) {
  throw Error(ErrorCode::NotTranscribed, what);
}

/// Collects a set over M(G) from proof names. `id_of` maps the proof's vertex
/// index to ours and returns 0 for indices the graph does not have.
class Builder {
 public:
  Builder(const MiddleGraph& mg, std::function<int(int)> id_of, std::string context)
      : mg_(mg), id_of_(std::move(id_of)), context_(std::move(context)),
        set_(mg.graph().order()) {}

  Builder& v(int i) {
    set_.insert(original(i));
    return *this;
  }

  Builder& m(int i, int j) {
    set_.insert(edge(i, j));
    return *this;
  }

  /// Everything except the listed vertices.
  Builder& all() {
    set_ = VertexSet::full(mg_.graph().order());
    return *this;
  }
  Builder& drop_v(int i) {
    set_.erase(original(i));
    return *this;
  }
  Builder& drop_m(int i, int j) {
    set_.erase(edge(i, j));
    return *this;
  }

  const VertexSet& set() const { return set_; }

 private:
  int original(int i) const {
    const int id = id_of_(i);
    if (id == 0) not_transcribed(context_ + ": the proof names v" + std::to_string(i) +
                                 ", which this graph does not have");
    return id;
  }

  int edge(int i, int j) const {
    const int a = id_of_(i);
    const int b = id_of_(j);
    const auto id = (a == 0 || b == 0) ? std::nullopt
                                       : mg_.find(MiddleLabel::edge_vertex(a, b));
    if (!id)
      not_transcribed(context_ + ": the proof names m" + std::to_string(i) + "," +
                      std::to_string(j) + ", which is not an edge of this graph");
    return *id;
  }

  const MiddleGraph& mg_;
  std::function<int(int)> id_of_;
  std::string context_;
  VertexSet set_;
};

std::function<int(int)> identity_ids(int n) {
  return [n](int i) { return (i >= 1 && i <= n) ? i : 0; };
}

/// Proof index v0..v_{n-1} stored at ids 1..n.
std::function<int(int)> zero_based_ids(int n) {
  return [n](int i) { return (i >= 0 && i < n) ? i + 1 : 0; };
}

/// The 2-per-3 pattern of edge-vertices along v1 v2 ... used for complete
/// graphs, wheels and the complete part of a 2-corona:
/// {m(3i+1)(3i+2), m(3i+2)(3i+3) : 0 <= i < floor(n/3)} plus a tail by n mod 3.
void two_thirds_pattern(Builder& b, int n) {
  for (int i = 0; i < n / 3; ++i) {
    b.m(3 * i + 1, 3 * i + 2);
    b.m(3 * i + 2, 3 * i + 3);
  }
  if (n % 3 == 1) b.m(n - 1, n);
  if (n % 3 == 2) {
    b.m(n - 2, n - 1);
    b.m(n - 1, n);
  }
}

Certificate finish(MiddleGraph mg, const VertexSet& set, std::string theorem) {
  Certificate c{std::move(mg), set, false, std::move(theorem)};
  c.valid = verify_tocd(c.middle.graph(), c.set).valid_tocd;
  return c;
}

Certificate complete_bipartite(const FamilySpec& spec, MiddleGraph mg) {
  // The proof takes n1 <= n2 with v_1..v_n1 on the small side and u_j
  // numbered after them as n1 + j.
  const bool swapped = spec.first > spec.second;
  const int n1 = std::min(spec.first, spec.second);
  const int n2 = std::max(spec.first, spec.second);
  const int small_offset = swapped ? spec.first : 0;
  const int large_offset = swapped ? 0 : spec.first;
  auto id_of = [=](int i) {
    if (i >= 1 && i <= n1) return small_offset + i;
    if (i > n1 && i <= n1 + n2) return large_offset + (i - n1);
    return 0;
  };
  const std::string ctx = to_string(spec);
  Builder b(mg, id_of, ctx);
  auto u = [n1](int j) { return n1 + j; };
  auto m = [&](int i, int j) { b.m(i, u(j)); };

  if (n1 == 1) {
    b.all().drop_v(1);
    return finish(std::move(mg), b.set(), "Thm 2.2");
  }
  if (n1 == 2 && n2 == 2) not_transcribed(ctx + ": K2,2 is only identified with C4");
  if (n1 == 2) {
    m(1, 1);
    b.v(u(1)).v(2);
    for (int i = 1; i <= n2; ++i) m(2, i);
    return finish(std::move(mg), b.set(), "Thm 2.6");
  }
  if (n1 == 3 && n2 == 3) {
    b.v(1);
    m(1, 1);
    m(2, 2);
    m(2, 3);
    m(3, 3);
    return finish(std::move(mg), b.set(), "Thm 2.6");
  }
  if (n2 >= 2 * n1) {
    for (int i = 1; i <= n1; ++i) {
      m(i, i);
      m(i, n1 + i);
    }
    for (int i = 1; i <= n2 - 2 * n1; ++i) m(n1, 2 * n1 + i);
    return finish(std::move(mg), b.set(), "Thm 2.6");
  }
  not_transcribed(ctx + ": the n1 <= n2 < 2n1 construction does not have n2 elements");
}

}  // namespace

Certificate certificate_for(const FamilySpec& spec) {
  MiddleGraph mg = middle_graph(generate(spec));
  const int a = spec.first;
  const int n = mg.base().order();
  const std::string ctx = to_string(spec);

  switch (spec.family) {
    case Family::Cycle: {
      Builder b(mg, identity_ids(n), ctx);
      b.all().drop_v(1).drop_v(2).drop_m(1, 2);
      return finish(std::move(mg), b.set(), "Thm 2.3");
    }
    case Family::Complete: {
      Builder b(mg, identity_ids(n), ctx);
      if (a <= 2) not_transcribed(ctx + ": no construction for K1 or K2");
      if (a == 3) {
        b.all().drop_v(1).drop_v(2).drop_m(1, 2);
        return finish(std::move(mg), b.set(), "Thm 2.3");
      }
      two_thirds_pattern(b, a);
      return finish(std::move(mg), b.set(), "Thm 2.4");
    }
    case Family::Wheel: {
      Builder b(mg, zero_based_ids(n), ctx);
      two_thirds_pattern(b, a);
      return finish(std::move(mg), b.set(), "Thm 2.5");
    }
    case Family::CompleteBipartite:
      return complete_bipartite(spec, std::move(mg));
    case Family::Star: {
      Builder b(mg, identity_ids(n), ctx);
      b.all().drop_v(1);
      return finish(std::move(mg), b.set(), "Thm 2.2");
    }
    case Family::Path: {
      Builder b(mg, identity_ids(n), ctx);
      if (a == 1) not_transcribed(ctx + ": M(P1) has no total dominating set");
      if (a <= 3) {
        b.all().drop_v(1);
        return finish(std::move(mg), b.set(), "Thm 2.2");
      }
      b.all().drop_v(2).drop_m(2, 3).drop_v(3);
      return finish(std::move(mg), b.set(), "Thm 3.3");
    }
    case Family::DoubleStar: {
      Builder b(mg, identity_ids(n), ctx);
      b.all().drop_v(n - 1).drop_v(n).drop_m(n - 1, n);
      return finish(std::move(mg), b.set(), "Prop 3.6");
    }
    case Family::Diam4Tree: {
      Builder b(mg, identity_ids(n), ctx);
      b.v(1).v(5).m(1, 2).m(4, 5);
      for (int i = 1; i <= n - 5; ++i) b.v(5 + i).m(3, 5 + i);
      return finish(std::move(mg), b.set(), "Prop 3.8");
    }
    case Family::Spider: {
      Builder b(mg, zero_based_ids(n), ctx);
      for (int i = 1; i <= a; ++i) b.m(i, a + i).v(a + i);
      b.m(0, 1).v(1);
      return finish(std::move(mg), b.set(), "Thm 4.4");
    }
    case Family::Friendship: {
      if (a < 2) not_transcribed(ctx + ": the construction is stated for n >= 2");
      Builder b(mg, zero_based_ids(n), ctx);
      for (int i = 1; i <= 2 * a - 1; i += 2) b.v(i).m(i, i + 1);
      b.m(0, 1);
      return finish(std::move(mg), b.set(), "Thm 4.5");
    }
    case Family::RandomTree:
    case Family::RandomConnected:
      break;
  }
  not_transcribed(ctx + ": no proof construction for this family");
}

Certificate certificate_for_corona(const FamilySpec& base_spec, Corona which) {
  const Graph base = generate(base_spec);
  const int n = base.order();
  if (n < 2 || !is_connected(base))
    throw Error(ErrorCode::BadParameter, "corona base must be connected with at least 2 vertices");
  MiddleGraph mg = middle_graph(which == Corona::K1 ? corona_k1(base) : corona_p2(base));
  const int total = mg.base().order();
  Builder b(mg, identity_ids(total), to_string(base_spec));

  if (which == Corona::K1) {
    for (int i = 1; i <= n; ++i) b.m(i, n + i).v(n + i);
    return finish(std::move(mg), b.set(), "Thm 4.1");
  }
  const bool complete = 2L * base.size() == static_cast<long>(n) * (n - 1);
  if (complete && n >= 3) {
    for (int i = 1; i <= n; ++i) b.v(2 * n + i).m(n + i, 2 * n + i);
    two_thirds_pattern(b, n);
    return finish(std::move(mg), b.set(), "Prop 4.3");
  }
  for (int i = 1; i <= n; ++i) b.v(n + i).v(2 * n + i).m(i, n + i).m(n + i, 2 * n + i);
  return finish(std::move(mg), b.set(), "Thm 4.2");
}

}  // namespace mgdom
