#include "lrcone/conegen.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>

#include "lrcone/oracle.hpp"

namespace lrcone {

const char* to_string(PairClass c) {
  switch (c) {
    case PairClass::NotCovering: return "NOT_COVERING";
    case PairClass::CoveringOnly: return "COVERING_ONLY";
    case PairClass::Facet: return "FACET";
  }
  return "?";
}

std::vector<QVec> ConeDescription::rows() const {
  std::vector<QVec> out;
  for (const auto& d : dominance) out.push_back(to_q(d.normal));
  for (const auto& f : facets) out.push_back(to_q(f.normal));
  return out;
}

std::vector<std::vector<int>> distinct_permutations(std::vector<int> t) {
  std::sort(t.begin(), t.end());
  std::vector<std::vector<int>> out;
  do out.push_back(t);
  while (std::next_permutation(t.begin(), t.end()));
  return out;
}

QVec concat(const std::vector<Weight>& weights) {
  QVec out;
  for (const Weight& w : weights)
    for (Int c : w.coords) out.push_back(Q(static_cast<long>(c)));
  return out;
}

ConeEngine::ConeEngine(const CartanType& type, int s, EngineOptions options)
    : rs_(std::make_unique<RootSystem>(type)), s_(s), options_(std::move(options)) {
  if (s < 2) throw InputError("the number of factors s must be at least 2");
  loc_ = std::make_shared<LocalizationTable>(*rs_);
}

const FlagSpace& ConeEngine::space(const std::vector<int>& I_in) {
  std::vector<int> I = I_in;
  std::sort(I.begin(), I.end());
  auto it = spaces_.find(I);
  if (it != spaces_.end()) return *it->second;
  auto fs = std::make_unique<FlagSpace>(Parabolic::complement_of(*rs_, I), loc_);
  if (options_.use_tables) {
    if (options_.cache_dir)
      fs->load_or_build_table(*options_.cache_dir);
    else
      fs->build_table();
  }
  return *spaces_.emplace(I, std::move(fs)).first->second;
}

std::vector<std::vector<int>> ConeEngine::degree_compatible_tuples(const std::vector<int>& I) {
  const Parabolic& p = space(I).parabolic();
  int m = p.num_cosets();
  int target = s_ * p.dimension();
  int k = slots();
  std::vector<std::vector<int>> out;
  std::vector<int> t(k);
  std::function<void(int, int, int)> rec = [&](int pos, int start, int sum) {
    if (pos == k) {
      if (sum == target) out.push_back(t);
      return;
    }
    for (int c = start; c < m; ++c) {
      int len = p.coset_length(c);
      // remaining slots can add at most dim each
      if (sum + len + (k - pos - 1) * p.dimension() < target) continue;
      if (sum + len > target) continue;
      t[pos] = c;
      rec(pos + 1, c, sum + len);
    }
  };
  rec(0, 0, 0);
  return out;
}

Inequality ConeEngine::make_inequality(int simple_index, const std::vector<int>& ws, int sign) {
  const FlagSpace& fs = space({simple_index});
  const Parabolic& p = fs.parabolic();
  Inequality q;
  q.lambda = rs_->fundamental_coweight_primitive(simple_index);
  q.simple_index = simple_index;
  q.levi = p.levi();
  q.ws = ws;
  IVec normal;
  for (int c : ws) {
    q.words.push_back(rs_->element(p.min_rep(c)).reduced_word);
    Coweight v = rs_->act_co(p.min_rep(c), q.lambda);
    q.coeff_vectors.push_back(v);
    for (Int x : v.coords) normal.push_back(sign * x);
  }
  q.normal = primitive(normal);
  return q;
}

ConeDescription ConeEngine::facets_with_sign(int sign) {
  ConeDescription desc;
  desc.type = rs_->type().name();
  desc.s = s_;
  desc.rank = rs_->rank();
  desc.sign = sign;
  int r = rs_->rank();
  for (int slot = 0; slot < slots(); ++slot)
    for (int j = 0; j < r; ++j) {
      IVec n(static_cast<size_t>(slots() * r), 0);
      n[static_cast<size_t>(slot * r + j)] = 1;
      desc.dominance.push_back({slot, j, n});
    }
  for (const AdmissibleOps& op : facet_ops(*rs_)) {
    const FlagSpace& fs = space({op.simple_index});
    for (const auto& t : degree_compatible_tuples({op.simple_index})) {
      if (!levi_movable(fs, t)) continue;
      for (const auto& ws : distinct_permutations(t)) {
        Inequality q = make_inequality(op.simple_index, ws, sign);
        q.point_product = 1;
        desc.facets.push_back(std::move(q));
      }
    }
  }
  std::sort(desc.facets.begin(), desc.facets.end(),
            [](const Inequality& a, const Inequality& b) { return a.normal < b.normal; });
  for (size_t k = 1; k < desc.facets.size(); ++k)
    if (desc.facets[k].normal == desc.facets[k - 1].normal)
      throw ConsistencyError("two provenances give the same inequality " + lrcone::to_string(desc.facets[k].normal));
  return desc;
}

ConeDescription ConeEngine::facets() {
  if (cached_) return *cached_;
  check_calibration();
  cached_ = facets_with_sign(kFormSign);
  return *cached_;
}

PairClass ConeEngine::classify_pair(int simple_index, const std::vector<int>& ws) {
  const FlagSpace& fs = space({simple_index});
  Int pp = fs.point_product(ws);
  if (pp == 0) return PairClass::NotCovering;
  Coweight lambda = rs_->fundamental_coweight_primitive(simple_index);
  std::vector<int> rest(ws.begin() + 1, ws.end());
  if (pp == 1 && rho_form_condition(fs.parabolic(), lambda, ws[0], rest)) return PairClass::Facet;
  return PairClass::CoveringOnly;
}

std::vector<ConeEngine::ClassifiedPair> ConeEngine::covering_pairs() {
  std::vector<ClassifiedPair> out;
  for (int i = 0; i < rs_->rank(); ++i) {
    const FlagSpace& fs = space({i});
    for (const auto& t : degree_compatible_tuples({i})) {
      Int pp = fs.point_product(t);
      if (pp == 0) continue;
      for (const auto& ws : distinct_permutations(t)) {
        PairClass cls = classify_pair(i, ws);
        out.push_back({i, ws, pp, cls, make_inequality(i, ws, kFormSign).normal});
      }
    }
  }
  return out;
}

std::vector<Face> ConeEngine::faces_codim(int d, bool verify) {
  int r = rs_->rank();
  if (d < 0 || d > r) throw InputError("face codimension out of range");
  std::vector<Face> out;
  if (d == 0) {
    Face f;
    f.ws.assign(slots(), 0);
    f.words.assign(slots(), {});
    out.push_back(f);
    return out;
  }
  std::optional<ConeDescription> desc;
  if (verify) desc = facets();
  for (const auto& I : admissible_tori(*rs_, d)) {
    const FlagSpace& fs = space(I);
    const Parabolic& p = fs.parabolic();
    for (const auto& t : degree_compatible_tuples(I)) {
      if (!levi_movable(fs, t)) continue;
      for (const auto& ws : distinct_permutations(t)) {
        Face f;
        f.I = I;
        f.ws = ws;
        f.codim = d;
        for (int c : ws) f.words.push_back(rs_->element(p.min_rep(c)).reduced_word);
        for (int a : I) {
          Coweight om = rs_->fundamental_coweight_primitive(a);
          IVec row;
          for (int c : ws)
            for (Int x : rs_->act_co(p.min_rep(c), om).coords) row.push_back(x);
          f.equalities.push_back(primitive(row));
        }
        if (rank(f.equalities) != d) throw ConsistencyError("face equality system has the wrong rank");
        if (verify) {
          std::vector<QVec> eqs;
          for (const IVec& e : f.equalities) eqs.push_back(to_q(e));
          poly::FaceInfo info = poly::face_of(desc->rows(), eqs, dim());
          if (info.dimension != dim() - d)
            throw ConsistencyError("emitted face does not have codimension " + std::to_string(d));
        }
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

bool member(const ConeDescription& desc, const std::vector<Weight>& weights) {
  if (static_cast<int>(weights.size()) != desc.s + 1) throw InputError("wrong number of weights");
  for (const Weight& w : weights)
    if (static_cast<int>(w.coords.size()) != desc.rank) throw InputError("weight has the wrong rank");
  QVec x = concat(weights);
  for (const QVec& row : desc.rows())
    if (dot(row, x) < 0) return false;
  return true;
}

std::vector<IrredundancyEntry> irredundancy_report(const ConeDescription& desc) {
  std::vector<QVec> rows = desc.rows();
  std::vector<IrredundancyEntry> out;
  for (int k = 0; k < static_cast<int>(rows.size()); ++k)
    out.push_back({k, desc.is_dominance_row(k), poly::irredundancy_certificate(rows, k, desc.dim())});
  return out;
}

poly::FaceInfo contact_face(const ConeDescription& desc, const IVec& normal) {
  return poly::face_of(desc.rows(), {to_q(normal)}, desc.dim());
}

bool meets_open_chamber(const ConeDescription& desc, const poly::FaceInfo& face) {
  for (int k : face.tight)
    if (desc.is_dominance_row(k)) return false;
  return true;
}

int calibrate_orientation() {
  ConeEngine engine(CartanType::parse("A1"), 2);
  RepOracle oracle(engine.rs());
  std::vector<int> agreeing;
  for (int sign : {1, -1}) {
    ConeDescription desc = engine.facets_with_sign(sign);
    bool ok = true;
    for (Int a = 0; a <= 4 && ok; ++a)
      for (Int b = 0; b <= 4 && ok; ++b)
        for (Int c = 0; c <= 4 && ok; ++c) {
          std::vector<Weight> pt{{{a}}, {{b}}, {{c}}};
          ok = member(desc, pt) == oracle.cone_member(pt, 2);
        }
    if (ok) agreeing.push_back(sign);
  }
  if (agreeing.size() != 1) throw ConsistencyError("sign calibration on A1, s = 2 is not decisive");
  return agreeing[0];
}

void check_calibration() {
  static std::once_flag once;
  static int found = 0;
  std::call_once(once, [] { found = calibrate_orientation(); });
  if (found != kFormSign)
    throw ConsistencyError("sign calibration mismatch: the oracle selects orientation " + std::to_string(found));
}

}  // namespace lrcone
