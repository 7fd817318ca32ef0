#include "cli.hpp"

#include <sstream>

#include <CLI11.hpp>

#include "lrcone/cache.hpp"
#include "lrcone/oracle.hpp"
#include "lrcone/torusgit.hpp"

namespace lrcone::cli {

using nlohmann::json;

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) out.push_back(cur);
  if (!text.empty() && text.back() == sep) out.push_back("");
  return out;
}

std::string strip(const std::string& s) {
  size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

Int parse_int(const std::string& s) {
  std::string t = strip(s);
  size_t pos = 0;
  Int v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw InputError("expected an integer, got '" + s + "'");
  }
  if (pos != t.size()) throw InputError("expected an integer, got '" + s + "'");
  return v;
}

Weight parse_vector(const std::string& text, int rank) {
  Weight w;
  for (const auto& part : split(text, ',')) w.coords.push_back(parse_int(part));
  if (static_cast<int>(w.coords.size()) != rank)
    throw InputError("weight '" + text + "' needs " + std::to_string(rank) + " coordinates");
  return w;
}

std::vector<int> one_based(const std::vector<int>& v) {
  std::vector<int> out;
  for (int i : v) out.push_back(i + 1);
  return out;
}

std::string slot_name(int slot) { return "nu_" + std::to_string(slot + 1); }

std::string form_text(const std::vector<Coweight>& coeffs) {
  std::string s;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += " + ";
    s += "<" + to_string(coeffs[i].coords) + ", " + slot_name(static_cast<int>(i)) + ">";
  }
  return s;
}

std::string words_text(const std::vector<std::vector<int>>& words) {
  std::string s = "(";
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) s += ", ";
    s += word_to_string(words[i]);
  }
  return s + ")";
}

std::string yes_no(bool in) { return in ? "IN" : "OUT"; }

struct Common {
  std::string type;
  int factors = 2;
  std::string format = "text";
  std::string cache_dir;
  bool verbose = false;
  bool allow_large_rank = false;
  int nmax = 4;
  bool cross_check = false;
};

void add_common(CLI::App* cmd, Common& c, bool needs_factors) {
  cmd->add_option("--type", c.type, "Cartan type, e.g. A2, B3, A1xA1")->required();
  if (needs_factors) cmd->add_option("--factors", c.factors, "number s of factors of G^s (s >= 2)");
  cmd->add_option("--format", c.format, "output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--cache-dir", c.cache_dir, "directory for cached Schubert tables");
  cmd->add_flag("--verbose", c.verbose, "report the resolved cache directory");
  cmd->add_flag("--allow-large-rank", c.allow_large_rank, "lift the rank <= 4 guard");
}

CartanType parse_type(const Common& c) { return CartanType::parse(c.type, c.allow_large_rank); }

EngineOptions engine_options(const Common& c, std::ostream& err) {
  EngineOptions opts;
  auto dir = cache::resolve_cache_dir(c.cache_dir);
  if (c.verbose) err << "cache directory: " << dir.string() << "\n";
  opts.cache_dir = dir;
  return opts;
}

}  // namespace

std::vector<Weight> parse_weights(const std::string& text, int rank) {
  std::vector<Weight> out;
  for (const auto& part : split(text, ';')) out.push_back(parse_vector(part, rank));
  return out;
}

std::vector<Weight> parse_support(const std::string& text, int rank) {
  std::vector<Weight> out;
  if (rank == 1) {
    for (const auto& part : split(text, ',')) out.push_back(Weight{{parse_int(part)}});
    return out;
  }
  for (const auto& part : split(text, ';')) out.push_back(parse_vector(part, rank));
  return out;
}

std::vector<std::vector<int>> parse_words(const std::string& text, int rank) {
  std::vector<std::vector<int>> out;
  for (const auto& part : split(text, ';')) {
    std::string w = strip(part);
    std::vector<int> word;
    if (!w.empty() && w != "e")
      for (const auto& letter : split(w, ',')) {
        Int i = parse_int(letter);
        if (i < 1 || i > rank) throw InputError("reflection index " + letter + " out of range");
        word.push_back(static_cast<int>(i - 1));
      }
    out.push_back(word);
  }
  return out;
}

std::vector<int> parse_indices(const std::string& text, int rank) {
  std::vector<int> out;
  if (strip(text).empty()) return out;
  for (const auto& part : split(text, ',')) {
    Int i = parse_int(part);
    if (i < 1 || i > rank) throw InputError("simple root index " + part + " out of range");
    out.push_back(static_cast<int>(i - 1));
  }
  return out;
}

json to_json(const ConeDescription& desc) {
  json doc;
  doc["type"] = desc.type;
  doc["factors"] = desc.s;
  doc["rank"] = desc.rank;
  json dom = json::array();
  for (const auto& d : desc.dominance)
    dom.push_back({{"slot", d.slot + 1}, {"simple", d.simple + 1}, {"normal", d.normal}});
  doc["dominance"] = dom;
  json facets = json::array();
  for (const auto& f : desc.facets) {
    json ws = json::array();
    for (const auto& w : f.words) ws.push_back(one_based(w));
    facets.push_back({{"lambda", f.lambda.coords},
                      {"ws", ws},
                      {"normal", f.normal},
                      {"provenance", {{"levi", one_based(f.levi)}, {"point_product", f.point_product}}}});
  }
  doc["facets"] = facets;
  return doc;
}

std::string render_text(const ConeDescription& desc) {
  std::ostringstream out;
  out << "type " << desc.type << ", factors " << desc.s << ": " << desc.dominance.size() << " dominance and "
      << desc.facets.size() << " facet inequalities\n";
  for (const auto& d : desc.dominance)
    out << "dominance <alpha_" << d.simple + 1 << "^vee, " << slot_name(d.slot) << "> >= 0\n";
  const char* rel = desc.sign < 0 ? " <= 0" : " >= 0";
  for (const auto& f : desc.facets)
    out << "facet lambda=" << to_string(f.lambda.coords) << " ws=" << words_text(f.words) << "  "
        << form_text(f.coeff_vectors) << rel << "\n";
  return out.str();
}

json to_json(const std::vector<Face>& faces, const ConeEngine& engine) {
  json arr = json::array();
  for (const auto& f : faces) {
    json ws = json::array();
    for (const auto& w : f.words) ws.push_back(one_based(w));
    arr.push_back({{"torus", one_based(f.I)}, {"ws", ws}, {"codim", f.codim}, {"equalities", f.equalities}});
  }
  json doc;
  doc["type"] = engine.rs().type().name();
  doc["factors"] = engine.s();
  doc["faces"] = arr;
  return doc;
}

std::string render_text(const std::vector<Face>& faces, const ConeEngine& engine) {
  std::ostringstream out;
  out << "type " << engine.rs().type().name() << ", factors " << engine.s() << ": " << faces.size() << " faces\n";
  for (const auto& f : faces) {
    std::vector<int> I = one_based(f.I);
    out << "face codim " << f.codim << " torus " << to_string(IVec(I.begin(), I.end())) << " ws="
        << words_text(f.words);
    for (const auto& e : f.equalities) out << "  " << to_string(e) << " . nu = 0";
    out << "\n";
  }
  return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tensor cone LR(G, G^s): facets, faces and cross-checks"};
  app.require_subcommand(1);
  Common c;
  std::string weights_text, support_text, words_text_arg, levi_text, torus_text;
  int codim = 1;

  auto* facets = app.add_subcommand("facets", "irredundant facet inequalities");
  add_common(facets, c, true);

  auto* member_cmd = app.add_subcommand("member", "membership via the facet description");
  add_common(member_cmd, c, true);
  member_cmd->add_option("--weights", weights_text, "weights: ';' between factors, ',' within")->required();
  member_cmd->add_option("--nmax", c.nmax, "oracle scaling bound for --cross-check");
  member_cmd->add_flag("--cross-check", c.cross_check, "also ask the representation oracle");

  auto* oracle_cmd = app.add_subcommand("oracle", "membership via invariants of tensor products");
  add_common(oracle_cmd, c, true);
  oracle_cmd->add_option("--weights", weights_text, "weights: ';' between factors, ',' within")->required();
  oracle_cmd->add_option("--nmax", c.nmax, "largest scaling n tried");
  oracle_cmd->add_flag("--cross-check", c.cross_check, "also evaluate the facet description");

  auto* faces = app.add_subcommand("faces", "faces of a given codimension meeting the dominant chamber");
  add_common(faces, c, true);
  faces->add_option("--codim", codim, "codimension d")->required();

  auto* schubert = app.add_subcommand("schubert", "products of Schubert classes");
  add_common(schubert, c, false);
  schubert->add_option("--levi", levi_text, "Levi simple roots of P, 1-based, comma separated");
  schubert->add_option("--words", words_text_arg, "Weyl words of the classes: ';' between, ',' within")->required();

  auto* bk = app.add_subcommand("bk", "Levi-movability of a coset tuple");
  add_common(bk, c, false);
  bk->add_option("--torus", torus_text, "simple roots I of the torus T_I, 1-based")->required();
  bk->add_option("--words", words_text_arg, "Weyl words of the cosets: ';' between, ',' within")->required();

  auto* gitmu = app.add_subcommand("gitmu", "numerical criterion for a torus weight support");
  add_common(gitmu, c, false);
  gitmu->add_option("--support", support_text, "weights; in rank one ',' separates points")->required();

  try {
    std::vector<std::string> argv(args.rbegin(), args.rend());
    app.parse(argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    CartanType type = parse_type(c);
    bool json_out = c.format == "json";

    if (*facets) {
      ConeEngine engine(type, c.factors, engine_options(c, err));
      ConeDescription desc = engine.facets();
      if (json_out)
        out << to_json(desc).dump(2) << "\n";
      else
        out << render_text(desc);
      return kOk;
    }
    if (*member_cmd || *oracle_cmd) {
      RootSystem probe(type);
      auto weights = parse_weights(weights_text, probe.rank());
      if (static_cast<int>(weights.size()) != c.factors + 1)
        throw InputError("expected " + std::to_string(c.factors + 1) + " weights");
      bool want_member = *member_cmd || c.cross_check;
      bool want_oracle = *oracle_cmd || c.cross_check;
      std::optional<bool> by_facets, by_oracle;
      if (want_member) {
        ConeEngine engine(type, c.factors, engine_options(c, err));
        by_facets = member(engine.facets(), weights);
      }
      if (want_oracle) {
        for (const Weight& w : weights)
          if (!probe.is_dominant(w)) throw InputError("oracle needs dominant weights");
        by_oracle = RepOracle(probe).cone_member(weights, c.nmax);
      }
      if (json_out) {
        json doc;
        if (by_facets) doc["member"] = *by_facets;
        if (by_oracle) doc["oracle"] = *by_oracle;
        out << doc.dump() << "\n";
      } else if (c.cross_check) {
        out << "member " << yes_no(*by_facets) << " oracle " << yes_no(*by_oracle) << "\n";
      } else {
        out << yes_no(by_facets ? *by_facets : *by_oracle) << "\n";
      }
      if (c.cross_check && *by_facets != *by_oracle) {
        err << "cross-check disagreement\n";
        return kDisagreement;
      }
      return kOk;
    }
    if (*faces) {
      ConeEngine engine(type, c.factors, engine_options(c, err));
      auto list = engine.faces_codim(codim);
      if (json_out)
        out << to_json(list, engine).dump(2) << "\n";
      else
        out << render_text(list, engine);
      return kOk;
    }
    if (*schubert) {
      RootSystem rs(type);
      Parabolic p(rs, parse_indices(levi_text, rs.rank()));
      FlagSpace fs(p);
      std::vector<int> cosets;
      for (const auto& w : parse_words(words_text_arg, rs.rank())) cosets.push_back(p.coset_of(rs.id_of_word(w)));
      auto name = [&](int cls) { return word_to_string(rs.element(p.min_rep(cls)).reduced_word); };
      SchubertClass prod = fs.fundamental_class();
      for (int cls : cosets) prod = fs.cup(prod, fs.basis(cls));
      Int pt = fs.point_product(cosets);
      if (json_out) {
        json terms = json::array();
        for (const auto& [cls, coeff] : prod.coeffs)
          terms.push_back({{"class", one_based(rs.element(p.min_rep(cls)).reduced_word)}, {"coefficient", coeff}});
        out << json{{"product", terms}, {"point_coefficient", pt}}.dump() << "\n";
      } else {
        out << "product:";
        if (prod.coeffs.empty()) out << " 0";
        for (const auto& [cls, coeff] : prod.coeffs) out << " " << coeff << "*[" << name(cls) << "]";
        out << "\npoint coefficient: " << pt << "\n";
      }
      return kOk;
    }
    if (*bk) {
      RootSystem rs(type);
      std::vector<int> I = parse_indices(torus_text, rs.rank());
      if (I.empty()) throw InputError("--torus needs at least one simple root");
      FlagSpace fs(Parabolic::complement_of(rs, I));
      std::vector<int> cosets;
      for (const auto& w : parse_words(words_text_arg, rs.rank()))
        cosets.push_back(fs.parabolic().coset_of(rs.id_of_word(w)));
      Int pp = fs.point_product(cosets);
      std::vector<Int> defect = theta_defect(fs.parabolic(), cosets);
      bool movable = levi_movable(fs, cosets);
      if (json_out) {
        out << json{{"point_product", pp}, {"theta_defect", defect}, {"levi_movable", movable}}.dump() << "\n";
      } else {
        out << "point coefficient: " << pp << "\ntheta defect: " << to_string(IVec(defect.begin(), defect.end()))
            << "\n" << (movable ? "LEVI_MOVABLE" : "NOT_LEVI_MOVABLE") << "\n";
      }
      return kOk;
    }
    if (*gitmu) {
      RootSystem rs(type);
      WeightedSupport x(rs, parse_support(support_text, rs.rank()));
      NumericalCriterion nc = numerical_criterion(x);
      auto adapted = adapted_ops(x);
      Q mag = abs(nc.signed_square);
      if (json_out) {
        json lam = json::array();
        for (const auto& l : adapted) lam.push_back(l.coords);
        out << json{{"semistable", nc.semistable},
                    {"M_squared", lrcone::to_string(mag)},
                    {"sign", nc.signed_square < 0 ? -1 : (nc.signed_square > 0 ? 1 : 0)},
                    {"adapted", lam}}
                   .dump()
            << "\n";
      } else {
        out << (nc.semistable ? "semistable" : "unstable") << "\nM^2 = " << lrcone::to_string(mag) << " with sign "
            << (nc.signed_square < 0 ? "-" : (nc.signed_square > 0 ? "+" : "0")) << "\n";
        for (const auto& l : adapted) out << "adapted lambda " << to_string(l.coords) << "\n";
      }
      return kOk;
    }
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConsistencyError& e) {
    err << json{{"status", "consistency_failure"}, {"message", e.what()}}.dump() << "\n";
    return kConsistency;
  }
  return kUsage;
}

}  // namespace lrcone::cli
