#include "fracchern/descriptor.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fracchern/errors.hpp"
#include "fracchern/parse.hpp"
#include "fracchern/symroots.hpp"

namespace fracchern {

using nlohmann::json;

AbelianGroupDesc::AbelianGroupDesc(int r, std::vector<int> t) : rank(r), torsion(std::move(t)) {
  if (rank < 0) throw PreconditionError("group rank must be nonnegative");
  for (int q : torsion)
    if (q < 2) throw PreconditionError("torsion orders must be >= 2");
}

std::string AbelianGroupDesc::str() const {
  if (trivial()) return "0";
  std::string out;
  if (rank > 0) out = rank == 1 ? "Z" : "Z^" + std::to_string(rank);
  for (int q : torsion) out += (out.empty() ? "" : " + ") + ("Z/" + std::to_string(q));
  return out;
}

namespace {

void check_class(const GradedPolynomial& p, const Ring& ring, int degree, const std::string& what) {
  if (!same_ring(p.ring(), ring)) throw PreconditionError(what + " is over the wrong ring");
  if (p.is_zero()) return;
  auto d = p.homogeneous_degree();
  if (!d || *d != degree)
    throw PreconditionError(what + " must be homogeneous of degree " + std::to_string(degree) + ": " + render(p));
}

template <class T>
const T& need(const std::optional<T>& v, const std::string& what) {
  if (!v) throw PreconditionError("descriptor is missing " + what);
  return *v;
}

const GradedPolynomial& need_index(const std::vector<GradedPolynomial>& v, int k, const std::string& what) {
  if (k < 1 || static_cast<std::size_t>(k) > v.size())
    throw PreconditionError("descriptor is missing " + what + std::to_string(k));
  return v[static_cast<std::size_t>(k) - 1];
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::string text_of(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(what + " must be a polynomial string");
}

std::vector<GradedPolynomial> class_list(const json& j, const Ring& ring, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  std::vector<GradedPolynomial> out;
  for (const auto& item : j) out.push_back(parse_polynomial(ring, text_of(item, what)));
  return out;
}

std::map<std::string, GradedPolynomial> image_map(const json& j, const Ring& target, const std::string& what) {
  if (!j.is_object()) throw ParseError(what + " must be an object");
  std::map<std::string, GradedPolynomial> out;
  for (const auto& [k, v] : j.items()) out.emplace(k, parse_polynomial(target, text_of(v, what + "." + k)));
  return out;
}

std::map<int, AbelianGroupDesc> groups(const json& j) {
  std::map<int, AbelianGroupDesc> out;
  for (const auto& [deg, g] : j.items()) {
    int d = 0;
    try {
      d = std::stoi(deg);
    } catch (const std::exception&) {
      throw ParseError("cohomology degree '" + deg + "' is not an integer");
    }
    std::vector<int> torsion;
    if (g.contains("torsion")) torsion = g.at("torsion").get<std::vector<int>>();
    out.emplace(d, AbelianGroupDesc(g.value("rank", 0), std::move(torsion)));
  }
  return out;
}

}  // namespace

void BundleDescriptor::validate() const {
  if (n < 1 || l < 1 || n % l != 0) throw PreconditionError("descriptor needs n >= 1 and l | n");
  if (!ringY || !ringM) throw PreconditionError("descriptor needs ringY and ringM");
  if (a) check_class(*a, ringY, 2, "class a");
  if (c.size() > static_cast<std::size_t>(n) || frac.size() > static_cast<std::size_t>(n))
    throw PreconditionError("more Chern classes than the rank");
  for (std::size_t k = 0; k < c.size(); ++k) check_class(c[k], ringY, 2 * int(k + 1), "c" + std::to_string(k + 1) + "(E)");
  for (std::size_t k = 0; k < frac.size(); ++k)
    check_class(frac[k], ringM, 2 * int(k + 1), "c" + std::to_string(k + 1) + "^{l,a}(E)");
  if (pi_star && (!same_ring(pi_star->source(), ringM) || !same_ring(pi_star->target(), ringY)))
    throw PreconditionError("pi* must map ringM to ringY");
  if (!loop) return;
  const auto& L = *loop;
  if (!L.ringLY || !L.ringLM) throw PreconditionError("loop data needs ringLY and ringLM");
  if (L.nuY && (!same_ring(L.nuY->source(), ringY) || !same_ring(L.nuY->target(), L.ringLY)))
    throw PreconditionError("nuY must map ringY to ringLY");
  if (L.nuM && (!same_ring(L.nuM->source(), ringM) || !same_ring(L.nuM->target(), L.ringLM)))
    throw PreconditionError("nuM must map ringM to ringLM");
  if (L.Lpi_star && (!same_ring(L.Lpi_star->source(), L.ringLM) || !same_ring(L.Lpi_star->target(), L.ringLY)))
    throw PreconditionError("Lpi* must map ringLM to ringLY");
  if (L.afrak) check_class(*L.afrak, L.ringLY, 1, "afrak");
  for (std::size_t k = 0; k < L.z.size(); ++k)
    check_class(L.z[k], L.ringLY, 2 * int(k + 1) - 1, "z" + std::to_string(k + 1) + "(LE)");
  for (std::size_t k = 0; k < L.zfrac.size(); ++k)
    check_class(L.zfrac[k], L.ringLM, 2 * int(k + 1) - 1, "z" + std::to_string(k + 1) + "^{l,a}(LE)");
}

const GradedPolynomial& BundleDescriptor::class_a() const { return need(a, "the class a"); }
const GradedPolynomial& BundleDescriptor::chern(int k) const { return need_index(c, k, "c_"); }
const GradedPolynomial& BundleDescriptor::fractional(int k) const { return need_index(frac, k, "c^{l,a}_"); }
const RingMorphism& BundleDescriptor::pi() const { return need(pi_star, "pi_star"); }
const LoopData& BundleDescriptor::loop_data() const { return need(loop, "loop data"); }
const GradedPolynomial& BundleDescriptor::afrak() const { return need(loop_data().afrak, "the loop class afrak"); }
const GradedPolynomial& BundleDescriptor::loop_chern(int k) const { return need_index(loop_data().z, k, "z_"); }
const GradedPolynomial& BundleDescriptor::loop_fractional(int k) const {
  return need_index(loop_data().zfrac, k, "z^{l,a}_");
}

Ring ring_from_json(const json& j) {
  std::vector<Generator> gens;
  const auto& list = field(j, "generators");
  if (!list.is_array()) throw ParseError("'generators' must be an array");
  for (const auto& g : list) gens.push_back({field(g, "name").get<std::string>(), field(g, "degree").get<int>()});
  return make_ring(std::move(gens), field(j, "degree_cap").get<int>());
}

json ring_to_json(const RingPresentation& ring) {
  json gens = json::array();
  for (const auto& g : ring.generators()) gens.push_back({{"name", g.name}, {"degree", g.degree}});
  return {{"generators", gens}, {"degree_cap", ring.degree_cap()}};
}

BundleDescriptor descriptor_from_json(const json& j) {
  BundleDescriptor d;
  try {
    d.n = field(j, "n").get<int>();
    d.l = field(j, "l").get<int>();
    d.ringY = ring_from_json(field(j, "ringY"));
    d.ringM = ring_from_json(field(j, "ringM"));
    if (j.contains("pi_star"))
      d.pi_star = RingMorphism::from_images(d.ringM, d.ringY, image_map(j.at("pi_star"), d.ringY, "pi_star"));
    if (j.contains("classes")) {
      const auto& cl = j.at("classes");
      if (cl.contains("a")) d.a = parse_polynomial(d.ringY, text_of(cl.at("a"), "classes.a"));
      if (cl.contains("c")) d.c = class_list(cl.at("c"), d.ringY, "classes.c");
      if (cl.contains("frac")) d.frac = class_list(cl.at("frac"), d.ringM, "classes.frac");
    }
    if (j.contains("loop")) {
      const auto& lj = j.at("loop");
      LoopData L;
      L.ringLY = ring_from_json(field(lj, "ringLY"));
      L.ringLM = ring_from_json(field(lj, "ringLM"));
      if (lj.contains("nuY")) L.nuY.emplace(d.ringY, L.ringLY, image_map(lj.at("nuY"), L.ringLY, "nuY"));
      if (lj.contains("nuM")) L.nuM.emplace(d.ringM, L.ringLM, image_map(lj.at("nuM"), L.ringLM, "nuM"));
      if (lj.contains("Lpi_star"))
        L.Lpi_star = RingMorphism::from_images(L.ringLM, L.ringLY, image_map(lj.at("Lpi_star"), L.ringLY, "Lpi_star"));
      if (lj.contains("afrak")) L.afrak = parse_polynomial(L.ringLY, text_of(lj.at("afrak"), "loop.afrak"));
      if (lj.contains("z")) L.z = class_list(lj.at("z"), L.ringLY, "loop.z");
      if (lj.contains("zfrac")) L.zfrac = class_list(lj.at("zfrac"), L.ringLM, "loop.zfrac");
      d.loop = std::move(L);
    }
    if (j.contains("cohomology")) {
      const auto& h = j.at("cohomology");
      if (h.contains("M")) d.hM = groups(h.at("M"));
      if (h.contains("LM")) d.hLM = groups(h.at("LM"));
    }
  } catch (const json::exception& e) {
    throw ParseError(std::string("descriptor JSON: ") + e.what());
  }
  d.validate();
  return d;
}

BundleDescriptor load_descriptor(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open descriptor '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("descriptor JSON: ") + e.what());
  }
  return descriptor_from_json(j);
}

BundleDescriptor symbolic_descriptor(int n, int l, SymbolicKind kind, int degree_cap) {
  if (n < 1 || l < 1 || n % l != 0) throw PreconditionError("symbolic descriptor needs l | n");
  const int cap = std::max(degree_cap, 2 * n);
  const int s = n / l;
  // classes c_k(E) that are free generators of H*(Y)
  const int first_free = kind == SymbolicKind::generic ? 1 : kind == SymbolicKind::fracSU ? 2 : 3;
  auto cname = [](int k) { return "c" + std::to_string(k) + "E"; };
  auto fname = [](int k) { return "f" + std::to_string(k); };

  std::vector<Generator> gy{{"a", 2}}, gm;
  for (int k = first_free; k <= n; ++k) {
    gy.push_back({cname(k), 2 * k});
    gm.push_back({fname(k), 2 * k});
  }
  BundleDescriptor d;
  d.n = n;
  d.l = l;
  d.ringY = make_ring(gy, cap);
  d.ringM = make_ring(gm, cap);
  auto Y = [&](const std::string& t) { return parse_polynomial(d.ringY, t); };
  d.a = Y("a");

  // c_k(E), with the relations of the chosen level
  const Rational sq = ratio(s * (n - 1), 2 * l);
  for (int k = 1; k <= n; ++k) {
    if (k >= first_free) d.c.push_back(Y(cname(k)));
    else if (k == 1) d.c.push_back(scale(Y("a"), s));
    else d.c.push_back(scale(Y("a^2"), sq));
  }
  for (int k = 1; k <= n; ++k)
    d.frac.push_back(k >= first_free ? parse_polynomial(d.ringM, fname(k)) : GradedPolynomial(d.ringM));

  // pi*(f_k) = sigma_k of the shifted roots, via the closed form
  RootModel model(n, l, cap);
  std::map<std::string, GradedPolynomial> e_to_y{{"a", Y("a")}};
  for (int k = 1; k <= n; ++k)
    if (model.e_index(k)) e_to_y.emplace("e" + std::to_string(k), d.c[k - 1]);
  auto to_y = RingMorphism::from_images(model.elementary_ring(), d.ringY, e_to_y);
  std::map<std::string, GradedPolynomial> pi_images;
  for (int k = first_free; k <= n; ++k) pi_images.emplace(fname(k), to_y(fractional_chern_closed(model, k)));
  d.pi_star = RingMorphism::from_images(d.ringM, d.ringY, pi_images);

  // loop rings: afrak, a, then z_k, c_k for the free low classes, then the rest
  std::vector<Generator> gly{{"af", 1}, {"a", 2}}, glm;
  for (int k = first_free; k <= n; ++k) {
    if (k <= 2) {
      gly.push_back({"z" + std::to_string(k) + "E", 2 * k - 1});
      glm.push_back({"w" + std::to_string(k), 2 * k - 1});
    }
    gly.push_back({cname(k), 2 * k});
    glm.push_back({fname(k), 2 * k});
  }
  LoopData L;
  L.ringLY = make_ring(gly, cap);
  L.ringLM = make_ring(glm, cap);
  auto LY = [&](const std::string& t) { return parse_polynomial(L.ringLY, t); };
  auto LM = [&](const std::string& t) { return parse_polynomial(L.ringLM, t); };
  auto pY = RingMorphism::by_names(d.ringY, L.ringLY);
  L.afrak = LY("af");

  // z1(LE) = nu(c1(E)), z2(LE) = nu(c2(E)) - z1 c1
  GradedPolynomial z1 = first_free <= 1 ? LY("z1E") : scale(LY("af"), s);
  GradedPolynomial z2(L.ringLY);
  if (n >= 2) {
    if (first_free <= 2) z2 = LY("z2E");
    else z2 = scale(LY("af*a"), ratio(-s, l));  // nu(sq*a^2) - z1 c1 = (2sq - s^2) af a
  }
  L.z = {z1};
  if (n >= 2) L.z.push_back(z2);

  std::map<std::string, GradedPolynomial> nu_y{{"a", LY("af")}};
  if (first_free <= 1) nu_y.emplace(cname(1), z1);
  if (first_free <= 2 && n >= 2) nu_y.emplace(cname(2), z2 + mul(z1, pY(d.c[0])));
  L.nuY.emplace(d.ringY, L.ringLY, nu_y);

  std::map<std::string, GradedPolynomial> nu_m;
  GradedPolynomial w1 = first_free <= 1 ? LM("w1") : GradedPolynomial(L.ringLM);
  GradedPolynomial w2 = (first_free <= 2 && n >= 2) ? LM("w2") : GradedPolynomial(L.ringLM);
  auto pM = RingMorphism::by_names(d.ringM, L.ringLM);
  if (first_free <= 1) nu_m.emplace(fname(1), w1);
  if (first_free <= 2 && n >= 2) nu_m.emplace(fname(2), w2 + mul(w1, pM(d.frac[0])));
  L.nuM.emplace(d.ringM, L.ringLM, nu_m);
  L.zfrac = {w1};
  if (n >= 2) L.zfrac.push_back(w2);

  // Lpi* by naturality: w1 -> nu(pi* f1), w2 -> nu(pi* f2) - Lpi*(w1) pi*(f1)
  std::map<std::string, GradedPolynomial> lpi;
  for (int k = first_free; k <= n; ++k) lpi.emplace(fname(k), pY(d.pi().image(fname(k))));
  GradedPolynomial lw1 = free_suspend(*L.nuY, d.pi()(d.frac[0]));
  if (first_free <= 1) lpi.emplace("w1", lw1);
  if (first_free <= 2 && n >= 2)
    lpi.emplace("w2", free_suspend(*L.nuY, d.pi()(d.frac[1])) - mul(lw1, pY(d.pi()(d.frac[0]))));
  L.Lpi_star = RingMorphism::from_images(L.ringLM, L.ringLY, lpi);
  d.loop = std::move(L);

  d.hM = {{1, AbelianGroupDesc(1, {})}, {3, AbelianGroupDesc(2, {})}};
  d.hLM = {{0, AbelianGroupDesc(1, {})}, {2, AbelianGroupDesc(1, {2})}};
  d.validate();
  return d;
}

}  // namespace fracchern
