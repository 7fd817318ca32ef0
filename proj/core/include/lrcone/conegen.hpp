#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lrcone/bkprod.hpp"
#include "lrcone/opsenum.hpp"
#include "lrcone/polyhedra.hpp"
#include "lrcone/schubert.hpp"

namespace lrcone {

// Orientation of the inequality map, fixed once by calibrate_orientation():
// the inward normal attached to (lambda; w_1..w_{s+1}) is
// kFormSign * (w_1 lambda, ..., w_{s+1} lambda), so the inequality reads
// sum_i <w_i lambda, nu_i> <= 0.
constexpr int kFormSign = -1;

struct Inequality {
  Coweight lambda;
  int simple_index = 0;                 // simple root outside the Levi of P(lambda)
  std::vector<int> levi;                // Levi of P(lambda)
  std::vector<int> ws;                  // cosets of P(lambda), one per slot
  std::vector<std::vector<int>> words;  // reduced words of their minimal representatives
  std::vector<Coweight> coeff_vectors;  // w_i lambda
  IVec normal;                          // primitive inward normal: normal . nu >= 0
  Int point_product = 0;
};

struct DominanceInequality {
  int slot = 0;
  int simple = 0;
  IVec normal;
};

// Points are concatenations (nu_1, ..., nu_{s+1}) of omega-coordinates.
struct ConeDescription {
  std::string type;
  int s = 0;
  int rank = 0;
  int sign = kFormSign;
  std::vector<DominanceInequality> dominance;
  std::vector<Inequality> facets;

  int dim() const { return (s + 1) * rank; }
  int num_rows() const { return static_cast<int>(dominance.size() + facets.size()); }
  // Dominance rows first, then facet rows.
  std::vector<QVec> rows() const;
  bool is_dominance_row(int k) const { return k < static_cast<int>(dominance.size()); }
};

enum class PairClass { NotCovering, CoveringOnly, Facet };
const char* to_string(PairClass c);

struct Face {
  std::vector<int> I;                   // simple roots indexing the torus T_I
  std::vector<int> ws;                  // cosets of P(I)
  std::vector<std::vector<int>> words;
  std::vector<IVec> equalities;         // sum_i <w_i omega_alpha^vee, nu_i> = 0, alpha in I
  int codim = 0;
};

struct EngineOptions {
  // Persist Schubert multiplication tables here when set.
  std::optional<std::filesystem::path> cache_dir;
  // Build full multiplication tables (in memory even without a cache dir).
  bool use_tables = true;
};

// Facet and face generation for LR(G, G^s), G diagonal in G^s.
class ConeEngine {
 public:
  ConeEngine(const CartanType& type, int s, EngineOptions options = {});

  const RootSystem& rs() const { return *rs_; }
  int s() const { return s_; }
  int slots() const { return s_ + 1; }
  int dim() const { return (s_ + 1) * rs_->rank(); }

  // Flag space G/P(I), P(I) the standard parabolic whose Levi has the simple
  // roots outside I.
  const FlagSpace& space(const std::vector<int>& I);

  // Nondecreasing coset tuples of P(I) whose Schubert dimensions add up to
  // s * dim G/P(I), the only ones with a possibly nonzero point coefficient.
  std::vector<std::vector<int>> degree_compatible_tuples(const std::vector<int>& I);

  // Cone description with the calibrated orientation; verifies the
  // calibration first and rejects duplicate normals.
  ConeDescription facets();
  // Same generation with an explicit orientation and no calibration check.
  ConeDescription facets_with_sign(int sign);

  PairClass classify_pair(int simple_index, const std::vector<int>& ws);
  // Every ordered degree-compatible tuple for every facet 1-PS with nonzero
  // point coefficient, classified.
  struct ClassifiedPair {
    int simple_index;
    std::vector<int> ws;
    Int point_product;
    PairClass cls;
    IVec normal;
  };
  std::vector<ClassifiedPair> covering_pairs();

  // Faces from Levi-movable tuples for |I| = d. With verify, each face is
  // checked to have the expected dimension in the facet description.
  std::vector<Face> faces_codim(int d, bool verify = true);

  Inequality make_inequality(int simple_index, const std::vector<int>& ws, int sign) ;

 private:
  std::unique_ptr<RootSystem> rs_;
  int s_;
  EngineOptions options_;
  std::shared_ptr<const LocalizationTable> loc_;
  std::map<std::vector<int>, std::unique_ptr<FlagSpace>> spaces_;
  std::optional<ConeDescription> cached_;
};

// All distinct orderings of a tuple.
std::vector<std::vector<int>> distinct_permutations(std::vector<int> t);

bool member(const ConeDescription& desc, const std::vector<Weight>& weights);
QVec concat(const std::vector<Weight>& weights);

struct IrredundancyEntry {
  int row = 0;  // index into desc.rows()
  bool dominance = false;
  poly::Certificate certificate;
};
std::vector<IrredundancyEntry> irredundancy_report(const ConeDescription& desc);

// Contact face of the hyperplane normal . x = 0 with the described cone.
poly::FaceInfo contact_face(const ConeDescription& desc, const IVec& normal);
// Whether a face contains a point with every slot strictly dominant.
bool meets_open_chamber(const ConeDescription& desc, const poly::FaceInfo& face);

// Orientation that makes A1, s = 2 agree with the Clebsch-Gordan oracle.
int calibrate_orientation();
// Throws ConsistencyError unless calibrate_orientation() == kFormSign.
void check_calibration();

}  // namespace lrcone
