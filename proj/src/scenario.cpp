#include "k3ord/scenario.hpp"

#include <fnmatch.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "k3ord/cohomology.hpp"
#include "k3ord/divisors.hpp"
#include "k3ord/embedding.hpp"
#include "k3ord/isometry.hpp"
#include "k3ord/linalg.hpp"
#include "k3ord/orders.hpp"

namespace k3ord::scenario {
namespace {

[[noreturn]] void schema_error(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::SchemaError, where + ": " + what);
}

const Json& field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.is_object()) schema_error(where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) schema_error(where, std::string("missing field '") + key + "'");
  return *it;
}

const Json* optional_field(const Json& obj, const char* key) {
  if (!obj.is_object()) return nullptr;
  auto it = obj.find(key);
  return it == obj.end() || it->is_null() ? nullptr : &*it;
}

std::string child(const std::string& where, const std::string& key) { return where + "." + key; }
std::string child(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

unsigned decode_count(const Json& j, const std::string& where) {
  Integer v = decode_integer(j, where);
  if (v < 0 || !v.fits_uint_p()) schema_error(where, "expected a small nonnegative integer");
  return static_cast<unsigned>(v.get_ui());
}

std::string decode_string(const Json& j, const std::string& where) {
  if (!j.is_string()) schema_error(where, "expected a string");
  return j.get<std::string>();
}

IntMatrix decode_square(const Json& j, const std::string& where) {
  IntMatrix m = decode_int_matrix(j, where);
  if (!m.is_square()) schema_error(where, "expected a square matrix");
  return m;
}

IntMatrix decode_gram(const Json& j, const std::string& where) {
  IntMatrix m = decode_square(j, where);
  if (!is_symmetric(m)) throw Error(ErrorCode::NotSymmetric, where + ": Gram matrix is not symmetric");
  return m;
}

Lattice decode_lattice(const Json& j, const std::string& where) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    if (name == "K3") return build_K3();
    if (name == "E8") return build_E8();
    if (name == "H") return build_H();
    schema_error(where, "unknown named lattice '" + name + "'");
  }
  IntMatrix gram = decode_gram(field(j, "gram", where), child(where, "gram"));
  std::vector<std::string> labels;
  if (auto* l = optional_field(j, "labels")) {
    if (!l->is_array() || l->size() != gram.rows()) schema_error(child(where, "labels"), "expected one label per basis vector");
    for (std::size_t i = 0; i < l->size(); ++i) labels.push_back(decode_string((*l)[i], child(child(where, "labels"), i)));
  }
  return Lattice(std::move(gram), std::move(labels));
}

// Matrix whose columns are the given vectors.
IntMatrix decode_columns(const Json& j, std::size_t height, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected a list of vectors");
  IntMatrix m(height, j.size());
  for (std::size_t c = 0; c < j.size(); ++c) {
    IntVector v = decode_int_vector(j[c], child(where, c));
    if (v.size() != height) schema_error(child(where, c), "vector length differs from lattice rank");
    m.set_column(c, v);
  }
  return m;
}

std::vector<IntVector> decode_vectors(const Json& j, std::size_t length, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected a list of vectors");
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    IntVector v = decode_int_vector(j[i], child(where, i));
    if (v.size() != length) schema_error(child(where, i), "vector length differs from lattice rank");
    out.push_back(std::move(v));
  }
  return out;
}

Json encode_columns(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(encode(m.column(c)));
  return out;
}

Json encode_factors(const std::vector<Integer>& f) {
  Json out = Json::array();
  for (const auto& x : f) out.push_back(encode(x));
  return out;
}

Json encode_signature(const Signature& s) {
  return Json{{"positive", s.positive}, {"negative", s.negative}, {"zero", s.zero}};
}

// --- group model payloads ---

AbGroupModel decode_model(const Json& j, const std::string& where) {
  AbGroupModel m;
  if (auto* f = optional_field(j, "free_rank")) m.free_rank = decode_count(*f, child(where, "free_rank"));
  if (auto* f = optional_field(j, "finite_cyclic")) m.finite_cyclic = decode_int_vector(*f, child(where, "finite_cyclic"));
  if (auto* f = optional_field(j, "elliptic_count")) m.elliptic_count = decode_count(*f, child(where, "elliptic_count"));
  return m;
}

BlockEndo decode_action(const Json& j, const AbGroupModel& m, const std::string& where) {
  BlockEndo a;
  a.order = decode_count(field(j, "order", where), child(where, "order"));
  if (auto* f = optional_field(j, "free"))
    a.free_action = decode_int_matrix(*f, child(where, "free"));
  else
    a.free_action = IntMatrix::identity(m.free_rank);
  if (auto* f = optional_field(j, "finite"))
    a.finite_action = decode_int_vector(*f, child(where, "finite"));
  else
    a.finite_action.assign(m.finite_cyclic.size(), Integer(1));
  if (auto* f = optional_field(j, "elliptic")) {
    if (!f->is_array()) schema_error(child(where, "elliptic"), "expected a list");
    for (std::size_t i = 0; i < f->size(); ++i) {
      const std::string w = child(child(where, "elliptic"), i);
      Integer sign = decode_integer(field((*f)[i], "sign", w), child(w, "sign"));
      if (sign != 1 && sign != -1) throw Error(ErrorCode::UnsupportedAction, w + ": sign must be +1 or -1");
      a.elliptic_action.push_back(
          EllipticMap{static_cast<int>(sign.get_si()), decode_count(field((*f)[i], "target", w), child(w, "target"))});
    }
  } else {
    for (std::size_t i = 0; i < m.elliptic_count; ++i) a.elliptic_action.push_back(EllipticMap{1, i});
  }
  return a;
}

// Element with unspecified parts filled by zeros of the model's shape.
GroupElement decode_element_in(const Json& j, const AbGroupModel& m, const std::string& where) {
  GroupElement x = decode_element(j, where);
  if (x.free.empty()) x.free.assign(m.free_rank, Integer(0));
  if (x.finite.empty()) x.finite.assign(m.finite_cyclic.size(), Integer(0));
  if (x.elliptic.empty()) x.elliptic.assign(m.elliptic_count, EllipticPoint{});
  if (x.free.size() != m.free_rank || x.finite.size() != m.finite_cyclic.size() ||
      x.elliptic.size() != m.elliptic_count)
    schema_error(where, "element shape differs from the group model");
  return x;
}

// Order of x in the model, or nullopt for elements of infinite order.
std::optional<Integer> element_order(const AbGroupModel& m, const GroupElement& x) {
  if (!is_zero(x.free)) return std::nullopt;
  Integer order = 1;
  for (std::size_t j = 0; j < m.finite_cyclic.size(); ++j) {
    Integer g = gcd(x.finite[j], m.finite_cyclic[j]);
    order = lcm(order, m.finite_cyclic[j] / g);
  }
  for (const auto& p : x.elliptic) {
    if (p.generic != 0) return std::nullopt;
    order = lcm(order, Integer(p.t1.get_den()));
    order = lcm(order, Integer(p.t2.get_den()));
  }
  return order;
}

SurfaceModel decode_surface(const Json& j, const std::string& where) {
  const std::string name = decode_string(field(j, "name", where), child(where, "name"));
  if (name == "p2") return surface_p2();
  if (name == "quadric") return surface_quadric();
  if (name == "hirzebruch") {
    Integer n = decode_integer(field(j, "n", where), child(where, "n"));
    if (!n.fits_sint_p()) throw Error(ErrorCode::UnsupportedParameter, where + ": n out of range");
    return surface_hirzebruch(static_cast<int>(n.get_si()));
  }
  if (name == "ruled-elliptic") {
    Integer d = decode_integer(field(j, "deg_e", where), child(where, "deg_e"));
    if (!d.fits_sint_p()) throw Error(ErrorCode::UnsupportedParameter, where + ": deg_e out of range");
    return surface_ruled_elliptic(static_cast<int>(d.get_si()));
  }
  if (name == "rational-elliptic") return surface_rational_elliptic();
  schema_error(child(where, "name"), "unknown surface '" + name + "'");
}

Tristate decode_tristate(const Json& j, const std::string& where) {
  const std::string s = decode_string(j, where);
  if (s == "yes") return Tristate::Yes;
  if (s == "no") return Tristate::No;
  if (s == "unknown") return Tristate::Unknown;
  schema_error(where, "expected yes, no or unknown");
}

// --- per-kind evaluators ---

struct Outcome {
  Json computed = Json::object();
  std::vector<std::string> assumptions;
};

struct EmbeddingPayload {
  Lattice target;
  Embedding embedding;
};

EmbeddingPayload decode_embedding(const Json& p) {
  Lattice target = decode_lattice(field(p, "target", "payload"), "payload.target");
  Lattice source(decode_gram(field(p, "source_gram", "payload"), "payload.source_gram"));
  IntMatrix matrix = decode_int_matrix(field(p, "matrix", "payload"), "payload.matrix");
  if (matrix.rows() != target.rank() || matrix.cols() != source.rank())
    schema_error("payload.matrix", "must be target rank x source rank");
  return {target, Embedding{source, target, matrix}};
}

Outcome run_embedding_check(const Json& p) {
  auto [target, e] = decode_embedding(p);
  Outcome out;
  const bool iso = check_isometric(e);
  out.computed["isometric"] = iso;
  out.computed["source_signature"] = encode_signature(signature(e.source.gram()));
  out.computed["primitive"] = is_primitive(e);
  out.computed["primitive_by_extension"] = extend_to_basis(e).has_value();
  ComplementResult c = orthogonal_complement(e);
  out.computed["complement_rank"] = c.complement.matrix.cols();
  out.computed["pic_plus_t_det"] = encode(c.pic_plus_t_det);
  if (auto* labels = optional_field(p, "completing_labels")) {
    IntMatrix frame = e.matrix;
    IntMatrix extra(target.rank(), labels->size());
    for (std::size_t i = 0; i < labels->size(); ++i) {
      const std::string w = child("payload.completing_labels", i);
      extra(target.index_of(decode_string((*labels)[i], w)), i) = 1;
    }
    frame = hstack(frame, extra);
    out.computed["completion_is_basis"] = frame.is_square() && is_unimodular(frame);
  }
  if (!iso) out.assumptions.push_back("embedding is not isometric; primitivity reported for the bare matrix");
  return out;
}

Outcome run_isometry_extend(const Json& p) {
  auto [target, e] = decode_embedding(p);
  IntMatrix action = decode_square(field(p, "action", "payload"), "payload.action");
  if (action.rows() != e.source.rank()) schema_error("payload.action", "size differs from the Picard rank");
  if (!check_isometric(e)) throw Error(ErrorCode::DimensionMismatch, "payload.matrix is not an isometric embedding");
  ExtensionResult r;
  if (auto* t = optional_field(p, "complement_basis"))
    r = extend_by_minus_one(target, e, action, decode_columns(*t, target.rank(), "payload.complement_basis"));
  else
    r = extend_by_minus_one(target, e, action);
  Outcome out;
  out.computed["integral"] = r.integral;
  out.computed["orthogonal"] = r.orthogonal;
  out.computed["involutive"] = r.involutive;
  out.computed["phi"] = r.phi_integer ? encode(*r.phi_integer) : encode(r.phi);
  if (auto* v = optional_field(p, "fixed_vector")) {
    IntVector x = decode_int_vector(*v, "payload.fixed_vector");
    if (x.size() != e.source.rank()) schema_error("payload.fixed_vector", "length differs from the Picard rank");
    out.computed["fixes_vector"] = fixes_vector(r, x, e);
  }
  out.assumptions = r.assumptions;
  return out;
}

GLattice decode_glattice(const Json& p) {
  Lattice l(decode_gram(field(p, "gram", "payload"), "payload.gram"));
  IntMatrix sigma = decode_square(field(p, "sigma", "payload"), "payload.sigma");
  if (sigma.rows() != l.rank()) schema_error("payload.sigma", "size differs from the lattice rank");
  return make_glattice(l, sigma, decode_count(field(p, "order", "payload"), "payload.order"));
}

Outcome run_h1(const Json& p) {
  GLattice gl = decode_glattice(p);
  Subquotient q = h1_presentation(gl.sigma, gl.order);
  Outcome out;
  out.computed["invariant_factors"] = encode_factors(q.result().invariant_factors);
  out.computed["free_rank"] = q.result().free_rank;
  Json gens = Json::array();
  for (const auto& g : q.result().generators) gens.push_back(encode(g));
  out.computed["generators"] = gens;
  if (auto* named = optional_field(p, "named_classes")) {
    auto vectors = decode_vectors(*named, gl.lattice.rank(), "payload.named_classes");
    Json rows = Json::array();
    bool all_cocycles = true;
    for (const auto& v : vectors) {
      Json row{{"vector", encode(v)}, {"cocycle", q.in_kernel(v)}};
      if (q.in_kernel(v)) {
        row["nontrivial"] = !q.is_trivial_class(v);
        row["class"] = encode_factors(q.class_of(v));
      } else {
        all_cocycles = false;
        row["nontrivial"] = nullptr;
      }
      rows.push_back(row);
    }
    out.computed["named_classes"] = rows;
    out.computed["named_classes_generate"] = all_cocycles && q.generates(vectors);
  }
  if (auto* img = optional_field(p, "image_members")) {
    auto vectors = decode_vectors(*img, gl.lattice.rank(), "payload.image_members");
    Json flags = Json::array();
    for (const auto& v : vectors) flags.push_back(q.in_image(v));
    out.computed["image_members"] = flags;
  }
  return out;
}

Outcome run_quotient_pic(const Json& p) {
  GLattice gl = decode_glattice(p);
  Embedding fixed = fixed_sublattice(gl);
  Outcome out;
  out.computed["fixed_basis"] = encode_columns(fixed.matrix);
  out.computed["fixed_gram"] = encode(fixed.source.gram());
  if (auto* named = optional_field(p, "named_fixed_basis")) {
    IntMatrix n = decode_columns(*named, gl.lattice.rank(), "payload.named_fixed_basis");
    // Same lattice iff each basis solves in terms of the other.
    bool spans = n.cols() == fixed.matrix.cols();
    for (std::size_t c = 0; spans && c < n.cols(); ++c) spans = solve_integer(fixed.matrix, n.column(c)).has_value();
    for (std::size_t c = 0; spans && c < fixed.matrix.cols(); ++c)
      spans = solve_integer(n, fixed.matrix.column(c)).has_value();
    out.computed["named_basis_spans"] = spans;
  }
  out.computed["half_gram"] = encode(half_gram_quotient(gl).gram());
  out.assumptions.push_back("pullback identifies the quotient Picard lattice with the fixed sublattice");
  return out;
}

Outcome run_ample_cert(const Json& p) {
  Lattice l(decode_gram(field(p, "gram", "payload"), "payload.gram"));
  IntVector s = decode_int_vector(field(p, "s", "payload"), "payload.s");
  if (s.size() != l.rank()) schema_error("payload.s", "length differs from the lattice rank");
  auto gens = decode_vectors(field(p, "generators", "payload"), l.rank(), "payload.generators");
  AmpleCertificate c = nakai_certificate(l, s, gens);
  Outcome out;
  out.computed["pass"] = c.pass;
  out.computed["self_int"] = encode(c.self_int);
  Json checks = Json::array();
  for (const auto& pc : c.pair_checks)
    checks.push_back(Json{{"index", pc.index},
                          {"s_dot_gen", encode(pc.s_dot_gen)},
                          {"s_dot_residual", encode(pc.s_dot_residual)},
                          {"residual_square", encode(pc.residual_square)}});
  out.computed["pair_checks"] = checks;
  if (!c.pass) out.computed["reason"] = c.reason;
  if (auto* classes = optional_field(p, "effectivity")) {
    auto vectors = decode_vectors(*classes, l.rank(), "payload.effectivity");
    Json verdicts = Json::array();
    for (const auto& v : vectors) verdicts.push_back(std::string(to_string(effectivity(l, v, c))));
    out.computed["effectivity"] = verdicts;
  }
  out.assumptions = c.assumptions;
  return out;
}

Outcome run_order_classify(const Json& p) {
  OrderDescriptor o;
  if (auto* vec = optional_field(p, "ramification_vector")) {
    std::vector<unsigned> indices;
    for (const auto& e : decode_int_vector(*vec, "payload.ramification_vector")) {
      if (e < 2 || !e.fits_uint_p()) schema_error("payload.ramification_vector", "indices must be >= 2");
      indices.push_back(static_cast<unsigned>(e.get_ui()));
    }
    o = ruled_elliptic_order(indices);
  } else {
    o.surface = decode_surface(field(p, "surface", "payload"), "payload.surface");
    const Json& ram = field(p, "ramification", "payload");
    if (!ram.is_array()) schema_error("payload.ramification", "expected a list");
    for (std::size_t i = 0; i < ram.size(); ++i) {
      const std::string w = child("payload.ramification", i);
      RamifiedDivisor d;
      d.d_class = decode_rat_vector(field(ram[i], "class", w), child(w, "class"));
      if (d.d_class.size() != o.surface.pic.rank()) schema_error(child(w, "class"), "length differs from the Picard rank");
      d.e = decode_count(field(ram[i], "e", w), child(w, "e"));
      if (d.e < 2) schema_error(child(w, "e"), "ramification index must be >= 2");
      if (auto* c = optional_field(ram[i], "cover_irreducible")) d.cover_irreducible = decode_tristate(*c, child(w, "cover_irreducible"));
      o.ramification.push_back(d);
    }
    std::vector<unsigned> indices;
    for (const auto& d : o.ramification) indices.push_back(d.e);
    o.cover_degree = std::accumulate(indices.begin(), indices.end(), 1u, [](unsigned a, unsigned b) { return std::lcm(a, b); });
    if (auto* n = optional_field(p, "cover_degree")) o.cover_degree = decode_count(*n, "payload.cover_degree");
  }
  Classification c = classify_order(o);
  std::vector<std::pair<std::string, unsigned>> profile;
  for (std::size_t i = 0; i < o.ramification.size(); ++i) profile.emplace_back("D" + std::to_string(i + 1), o.ramification[i].e);
  std::vector<unsigned> transfer = ramification_transfer(profile);

  Outcome out;
  out.computed["surface"] = o.surface.name;
  out.computed["kind"] = std::string(to_string(c.kind));
  out.computed["k_order"] = encode(c.k_order);
  out.computed["numerically_trivial"] = is_numerically_trivial(o.surface, c.k_order);
  out.computed["anticanonical_square"] = encode(c.anticanonical_square);
  Json pairings = Json::array();
  for (const auto& q : c.anticanonical_pairings) pairings.push_back(encode(q));
  out.computed["anticanonical_pairings"] = pairings;
  out.computed["ramification_indices"] = transfer;
  out.computed["cover_degree"] = o.cover_degree;
  out.computed["overlap_applicable"] = overlap_applicable(transfer, o.cover_degree);
  out.computed["maximality"] = std::string(to_string(maximality_check(o)));
  out.assumptions.push_back("cover irreducibility of each ramification divisor is taken as given");
  return out;
}

Json run_element_checks(const AbGroupModel& m, const BlockEndo& a, const GroupElement& x) {
  Json row{{"element", encode(x)}};
  const bool cocycle = cocycle_check(m, a, x);
  row["cocycle"] = cocycle;
  if (cocycle) {
    row["coboundary"] = coboundary_check(m, a, x);
    row["class_trivial"] = class_is_trivial(m, a, x);
  } else {
    row["coboundary"] = nullptr;
    row["class_trivial"] = nullptr;
  }
  auto ord = element_order(m, x);
  row["element_order"] = ord ? Json(ord->get_str()) : Json("infinite");
  return row;
}

SectionSymbol decode_symbol(const Json& j, const std::string& where) {
  SectionSymbol s;
  const std::string kind = decode_string(field(j, "kind", where), child(where, "kind"));
  if (kind == "zero")
    s.kind = SectionKind::Zero;
  else if (kind == "horizontal")
    s.kind = SectionKind::Horizontal;
  else if (kind == "vertical")
    s.kind = SectionKind::Vertical;
  else if (kind == "graph")
    s.kind = SectionKind::Graph;
  else
    schema_error(child(where, "kind"), "unknown section kind '" + kind + "'");
  if (auto* n = optional_field(j, "name")) s.name = decode_string(*n, child(where, "name"));
  if (auto* pre = optional_field(j, "zero_preimages")) {
    if (!pre->is_array()) schema_error(child(where, "zero_preimages"), "expected a list");
    for (std::size_t i = 0; i < pre->size(); ++i) s.zero_preimages.push_back(decode_string((*pre)[i], child(child(where, "zero_preimages"), i)));
  }
  return s;
}

Outcome run_fibration_h1(const Json& p) {
  AbGroupModel m = decode_model(field(p, "model", "payload"), "payload.model");
  BlockEndo a = decode_action(field(p, "action", "payload"), m, "payload.action");
  StructuredH1 h = h1_structured(m, a);
  Outcome out;
  out.computed["invariant_factors"] = encode_factors(h.invariant_factors);
  out.computed["free_rank"] = h.free_rank;
  Json comps = Json::array();
  for (const auto& c : h.components) {
    Json gens = Json::array();
    for (const auto& g : c.generators) gens.push_back(encode(g));
    comps.push_back(Json{{"summand", c.summand},
                         {"invariant_factors", encode_factors(c.invariant_factors)},
                         {"free_rank", c.free_rank},
                         {"generators", gens}});
  }
  out.computed["components"] = comps;

  if (auto* els = optional_field(p, "elements")) {
    if (!els->is_array()) schema_error("payload.elements", "expected a list");
    Json rows = Json::array();
    for (std::size_t i = 0; i < els->size(); ++i)
      rows.push_back(run_element_checks(m, a, decode_element_in((*els)[i], m, child("payload.elements", i))));
    out.computed["elements"] = rows;
  }

  if (auto* r = optional_field(p, "restrictions")) {
    const std::string w = "payload.restrictions";
    GLattice gl = decode_glattice(*r);
    IntVector l = decode_int_vector(field(*r, "class", w), child(w, "class"));
    if (l.size() != gl.lattice.rank()) schema_error(child(w, "class"), "length differs from the lattice rank");
    Json rows = Json::array();
    for (const auto& e : decode_int_vector(field(*r, "indices", w), child(w, "indices"))) {
      if (e < 1 || gl.order % e != 0) throw Error(ErrorCode::DNotDividing, w + ": index must divide the group order");
      const unsigned d = gl.order / static_cast<unsigned>(e.get_ui());
      RestrictionClass rc = untot_restriction(gl, l, d);
      Json row{{"index", encode(e)}, {"d", d}, {"class", encode(rc.cls)}, {"claimed_torsion", rc.claimed_torsion}};
      // Express the class as a power of the input bundle when it is one.
      std::optional<Integer> power;
      for (std::size_t i = 0; i < l.size(); ++i) {
        if (l[i] == 0) {
          if (rc.cls[i] != 0) { power.reset(); break; }
          continue;
        }
        if (rc.cls[i] % l[i] != 0) { power.reset(); break; }
        Integer k = rc.cls[i] / l[i];
        if (power && *power != k) { power.reset(); break; }
        power = k;
      }
      row["power"] = power ? Json(power->get_str()) : Json(nullptr);
      rows.push_back(row);
      if (!rc.note.empty() && std::find(out.assumptions.begin(), out.assumptions.end(), rc.note) == out.assumptions.end())
        out.assumptions.push_back(rc.note);
    }
    out.computed["restrictions"] = rows;
  }

  if (auto* s = optional_field(p, "sections")) {
    const std::string w = "payload.sections";
    TrivialFibration fib;
    if (auto* f = optional_field(*s, "fibration")) {
      if (auto* x = optional_field(*f, "fibre")) fib.fibre = decode_string(*x, child(w, "fibration.fibre"));
      if (auto* x = optional_field(*f, "base")) fib.base = decode_string(*x, child(w, "fibration.base"));
      if (auto* x = optional_field(*f, "zero")) fib.zero = decode_string(*x, child(w, "fibration.zero"));
    }
    const Json& symbols = field(*s, "symbols", w);
    if (!symbols.is_array()) schema_error(child(w, "symbols"), "expected a list");
    Json rows = Json::array();
    for (std::size_t i = 0; i < symbols.size(); ++i)
      rows.push_back(section_line_bundle(SectionExpr{{{Integer(1), decode_symbol(symbols[i], child(child(w, "symbols"), i))}}}, fib).to_string());
    out.computed["line_bundles"] = rows;
  }

  if (auto* s = optional_field(p, "mw_sum")) {
    const std::string w = "payload.mw_sum";
    IntVector c1 = decode_int_vector(field(*s, "c1", w), child(w, "c1"));
    IntVector c2 = decode_int_vector(field(*s, "c2", w), child(w, "c2"));
    IntVector s0 = decode_int_vector(field(*s, "s0", w), child(w, "s0"));
    IntVector sum = mw_sum_rational_elliptic(c1, c2, s0);
    SurfaceModel z = surface_rational_elliptic();
    IntVector fibre(10, Integer(-1));
    fibre[0] = 3;
    out.computed["mw_sum"] = Json{{"class", encode(sum)},
                                  {"square", encode(pair(z.pic, sum, sum))},
                                  {"dot_fibre", encode(pair(z.pic, sum, fibre))}};
  }
  return out;
}

Outcome run_twist_check(const Json& p) {
  AbGroupModel m = decode_model(field(p, "model", "payload"), "payload.model");
  BlockEndo a = decode_action(field(p, "action", "payload"), m, "payload.action");
  validate(m, a);
  GroupElement x = decode_element_in(field(p, "element", "payload"), m, "payload.element");
  Outcome out;
  out.computed = run_element_checks(m, a, x);
  out.assumptions.push_back("a cocycle defines a well-defined twisted action; cohomologous cocycles give isomorphic twists");
  return out;
}

const std::map<std::string, std::function<Outcome(const Json&)>>& evaluators() {
  static const std::map<std::string, std::function<Outcome(const Json&)>> table = {
      {"embedding-check", run_embedding_check}, {"isometry-extend", run_isometry_extend},
      {"h1", run_h1},                           {"quotient-pic", run_quotient_pic},
      {"ample-cert", run_ample_cert},           {"order-classify", run_order_classify},
      {"fibration-h1", run_fibration_h1},       {"twist-check", run_twist_check},
  };
  return table;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path.string() + ": " + e.what());
  }
}

Verdict decode_verdict(const std::string& s) {
  if (s == "pass") return Verdict::Pass;
  if (s == "fail") return Verdict::Fail;
  if (s == "error") return Verdict::Error;
  throw Error(ErrorCode::SchemaError, "unknown verdict '" + s + "'");
}

std::string escape_pointer(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~')
      out += "~0";
    else if (c == '/')
      out += "~1";
    else
      out += c;
  }
  return out;
}

bool is_check_dir(const std::filesystem::path& p) { return std::filesystem::is_regular_file(p / "scenario.json"); }

std::vector<std::filesystem::path> sorted_subdirs(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> out;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_directory()) out.push_back(entry.path());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::filesystem::path> matching_cases(const std::filesystem::path& root, const std::string& glob) {
  if (!std::filesystem::is_directory(root)) throw Error(ErrorCode::MissingCorpus, "no corpus directory at " + root.string());
  std::vector<std::filesystem::path> out;
  for (const auto& dir : sorted_subdirs(root))
    if (fnmatch(glob.c_str(), dir.filename().string().c_str(), 0) == 0) out.push_back(dir);
  return out;
}

}  // namespace

// --- encoding ---

Json encode(const Integer& x) { return x.get_str(); }

Json encode(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return Json{{"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}};
}

Json encode(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Json encode(const RatVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(encode(x));
  return out;
}

Json encode(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(encode(m.row(i)));
  return out;
}

Json encode(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(encode(m.row(i)));
  return out;
}

Json encode(const GroupElement& x) {
  Json ell = Json::array();
  for (const auto& p : x.elliptic) ell.push_back(Json{{"generic", encode(p.generic)}, {"t1", encode(p.t1)}, {"t2", encode(p.t2)}});
  return Json{{"free", encode(x.free)}, {"finite", encode(IntVector(x.finite))}, {"elliptic", ell}};
}

Integer decode_integer(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.dump());
  if (!j.is_string()) schema_error(where, "expected an integer");
  Integer x;
  const std::string s = j.get<std::string>();
  if (s.empty() || x.set_str(s, 10) != 0) schema_error(where, "'" + s + "' is not a decimal integer");
  return x;
}

Rational decode_rational(const Json& j, const std::string& where) {
  if (!j.is_object()) return Rational(decode_integer(j, where));
  Integer num = decode_integer(field(j, "num", where), child(where, "num"));
  Integer den = decode_integer(field(j, "den", where), child(where, "den"));
  if (den == 0) schema_error(where, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

IntVector decode_int_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  IntVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(decode_integer(j[i], child(where, i)));
  return v;
}

RatVector decode_rat_vector(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array");
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(decode_rational(j[i], child(where, i)));
  return v;
}

IntMatrix decode_int_matrix(const Json& j, const std::string& where) {
  if (!j.is_array()) schema_error(where, "expected an array of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < j.size(); ++i) rows.push_back(decode_int_vector(j[i], child(where, i)));
  for (const auto& r : rows)
    if (r.size() != rows.front().size()) schema_error(where, "ragged rows");
  return IntMatrix::from_rows(rows);
}

GroupElement decode_element(const Json& j, const std::string& where) {
  if (!j.is_object()) schema_error(where, "expected an element object");
  GroupElement x;
  if (auto* f = optional_field(j, "free")) x.free = decode_int_vector(*f, child(where, "free"));
  if (auto* f = optional_field(j, "finite")) x.finite = decode_int_vector(*f, child(where, "finite"));
  if (auto* f = optional_field(j, "elliptic")) {
    if (!f->is_array()) schema_error(child(where, "elliptic"), "expected a list");
    for (std::size_t i = 0; i < f->size(); ++i) {
      const std::string w = child(child(where, "elliptic"), i);
      EllipticPoint p;
      if (auto* g = optional_field((*f)[i], "generic")) p.generic = decode_rational(*g, child(w, "generic"));
      if (auto* g = optional_field((*f)[i], "t1")) p.t1 = decode_rational(*g, child(w, "t1"));
      if (auto* g = optional_field((*f)[i], "t2")) p.t2 = decode_rational(*g, child(w, "t2"));
      x.elliptic.push_back(p);
    }
  }
  return x;
}

// --- reports ---

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Error: return "error";
  }
  return "error";
}

Json to_json(const Report& r) {
  Json j{{"schema", kSchema}, {"id", r.id}, {"kind", r.kind}, {"verdict", std::string(to_string(r.verdict))}};
  j["computed"] = r.computed;
  j["assumptions"] = r.assumptions;
  Json d = Json::array();
  for (const auto& e : r.diff) d.push_back(Json{{"path", e.path}, {"expected", e.expected}, {"actual", e.actual}});
  j["diff"] = d;
  j["error"] = r.error ? Json{{"code", r.error->code}, {"message", r.error->message}} : Json(nullptr);
  if (r.timing_ms) j["timing_ms"] = *r.timing_ms;
  return j;
}

Report report_from_json(const Json& j) {
  if (!j.is_object() || j.value("schema", "") != kSchema) throw Error(ErrorCode::SchemaError, "not a k3ord/1 report");
  Report r;
  r.id = decode_string(field(j, "id", "report"), "report.id");
  r.kind = decode_string(field(j, "kind", "report"), "report.kind");
  r.verdict = decode_verdict(decode_string(field(j, "verdict", "report"), "report.verdict"));
  r.computed = field(j, "computed", "report");
  for (const auto& a : field(j, "assumptions", "report")) r.assumptions.push_back(decode_string(a, "report.assumptions"));
  for (const auto& d : field(j, "diff", "report"))
    r.diff.push_back(DiffEntry{decode_string(field(d, "path", "report.diff"), "report.diff.path"), field(d, "expected", "report.diff"),
                               field(d, "actual", "report.diff")});
  if (auto* e = optional_field(j, "error"))
    r.error = ReportError{decode_string(field(*e, "code", "report.error"), "report.error.code"),
                          decode_string(field(*e, "message", "report.error"), "report.error.message")};
  if (auto* t = optional_field(j, "timing_ms")) r.timing_ms = t->get<double>();
  return r;
}

std::vector<DiffEntry> diff(const Json& expected, const Json& actual, const std::string& path) {
  std::vector<DiffEntry> out;
  if (expected.is_object() && actual.is_object()) {
    for (auto it = expected.begin(); it != expected.end(); ++it) {
      const std::string p = path + "/" + escape_pointer(it.key());
      auto found = actual.find(it.key());
      if (found == actual.end()) {
        out.push_back(DiffEntry{p, it.value(), nullptr});
        continue;
      }
      auto sub = diff(it.value(), *found, p);
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  if (expected.is_array() && actual.is_array() && expected.size() == actual.size()) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      auto sub = diff(expected[i], actual[i], path + "/" + std::to_string(i));
      out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
  }
  if (expected != actual) out.push_back(DiffEntry{path.empty() ? "/" : path, expected, actual});
  return out;
}

Report evaluate(const Json& scenario, const std::optional<Json>& expected, const std::string& id) {
  Report r;
  r.id = id;
  try {
    if (!scenario.is_object()) throw Error(ErrorCode::SchemaError, "scenario must be a JSON object");
    if (scenario.value("schema", "") != kSchema) throw Error(ErrorCode::SchemaError, "scenario schema must be k3ord/1");
    if (auto* i = optional_field(scenario, "id")) r.id = decode_string(*i, "id");
    r.kind = decode_string(field(scenario, "kind", "scenario"), "kind");
    auto it = evaluators().find(r.kind);
    if (it == evaluators().end()) throw Error(ErrorCode::SchemaError, "unknown kind '" + r.kind + "'");
    Outcome o = it->second(field(scenario, "payload", "scenario"));
    r.computed = std::move(o.computed);
    r.assumptions = std::move(o.assumptions);
  } catch (const Error& e) {
    r.error = ReportError{std::string(to_string(e.code())), e.what()};
  }

  if (!expected) {
    r.verdict = r.error ? Verdict::Error : Verdict::Pass;
    return r;
  }
  if (auto* code = optional_field(*expected, "error")) {
    const std::string want = code->is_string() ? code->get<std::string>() : code->dump();
    const std::string got = r.error ? r.error->code : "";
    r.verdict = got == want ? Verdict::Pass : Verdict::Fail;
    if (got != want) r.diff.push_back(DiffEntry{"/error", want, r.error ? Json(got) : Json(nullptr)});
    return r;
  }
  if (r.error) {
    r.verdict = Verdict::Error;
    return r;
  }
  if (auto* want = optional_field(*expected, "computed")) r.diff = diff(*want, r.computed);
  r.verdict = r.diff.empty() ? Verdict::Pass : Verdict::Fail;
  return r;
}

Report run_scenario(const std::filesystem::path& path, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  std::filesystem::path file = std::filesystem::is_directory(path) ? path / "scenario.json" : path;
  std::string id = file.parent_path().filename().string();
  if (file.parent_path().has_parent_path()) {
    const auto parent = file.parent_path().parent_path().filename().string();
    if (!parent.empty()) id = parent + "/" + id;
  }
  Report r;
  try {
    Json scenario = read_json_file(file);
    std::optional<Json> expected;
    const auto exp_path = file.parent_path() / "expected.json";
    if (std::filesystem::is_regular_file(exp_path)) expected = read_json_file(exp_path);
    r = evaluate(scenario, expected, id);
  } catch (const Error& e) {
    r.id = id;
    r.verdict = Verdict::Error;
    r.error = ReportError{std::string(to_string(e.code())), e.what()};
  }
  if (timing)
    r.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::vector<Report> run_corpus(const std::filesystem::path& root, const std::string& case_glob, bool timing) {
  std::vector<Report> out;
  for (const auto& c : matching_cases(root, case_glob)) {
    if (is_check_dir(c)) out.push_back(run_scenario(c, timing));
    for (const auto& check : sorted_subdirs(c))
      if (is_check_dir(check)) out.push_back(run_scenario(check, timing));
  }
  return out;
}

std::size_t count_cases(const std::filesystem::path& root, const std::string& case_glob) {
  return matching_cases(root, case_glob).size();
}

int exit_code(const std::vector<Report>& reports) {
  int code = 0;
  for (const auto& r : reports) {
    if (r.verdict == Verdict::Error) return 2;
    if (r.verdict == Verdict::Fail) code = 1;
  }
  return code;
}

}  // namespace k3ord::scenario
