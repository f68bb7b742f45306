#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "trivext/algkit/hom.hpp"
#include "trivext/bimod/bimodule.hpp"
#include "trivext/quiverlang/path_basis.hpp"

namespace trivext::io {

using nlohmann::ordered_json;

/// Malformed or unreadable input file.
class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
}

/// Residues with runs of zeros of length >= 3 written as "0*N".
inline ordered_json encode_residues(const std::vector<Elem>& v) {
  ordered_json a = ordered_json::array();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == 0) ++j;
    if (j - i >= 3) {
      a.push_back("0*" + std::to_string(j - i));
      i = j;
    } else {
      a.push_back(v[i]);
      ++i;
    }
  }
  return a;
}

inline std::vector<Elem> decode_residues(const ordered_json& a, const Field& f, std::size_t expected,
                                         const std::string& what) {
  if (!a.is_array()) throw InputError(what + ": expected an array");
  std::vector<Elem> v;
  v.reserve(expected);
  for (const auto& x : a) {
    if (x.is_number_integer()) {
      long long r = x.get<long long>();
      if (r < 0) r = static_cast<long long>(f.prime()) - ((-r) % f.prime());
      if (static_cast<unsigned long long>(r) >= f.prime()) throw InputError(what + ": residue " + std::to_string(r) + " out of range");
      v.push_back(static_cast<Elem>(r % f.prime()));
    } else if (x.is_string()) {
      const std::string s = x.get<std::string>();
      if (s.rfind("0*", 0) != 0) throw InputError(what + ": bad run '" + s + "'");
      std::size_t n = 0;
      try {
        n = std::stoul(s.substr(2));
      } catch (const std::exception&) {
        throw InputError(what + ": bad run '" + s + "'");
      }
      v.insert(v.end(), n, 0);
    } else {
      throw InputError(what + ": expected integers or \"0*N\" runs");
    }
  }
  if (v.size() != expected)
    throw InputError(what + ": expected " + std::to_string(expected) + " residues, found " + std::to_string(v.size()));
  return v;
}

inline ordered_json encode_matrix(const Matrix& m) {
  std::vector<Elem> flat;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) flat.push_back(m(r, c));
  return encode_residues(flat);
}

inline Matrix decode_matrix(const ordered_json& a, const Field& f, std::size_t rows, std::size_t cols,
                            const std::string& what) {
  auto flat = decode_residues(a, f, rows * cols, what);
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = flat[r * cols + c];
  return m;
}

inline ordered_json algebra_to_json(const Algebra& a, const std::string& name = "") {
  ordered_json j;
  j["format"] = "trivext-algebra";
  if (!name.empty()) j["name"] = name;
  j["p"] = a.field().prime();
  j["dim"] = a.dim();
  j["labels"] = a.labels();
  std::vector<Elem> mult;
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t k = 0; k < a.dim(); ++k) {
      Vec c = a.coefficients_of(i, k);
      mult.insert(mult.end(), c.begin(), c.end());
    }
  j["mult"] = encode_residues(mult);
  j["unit"] = encode_residues(a.unit());
  ordered_json ids = ordered_json::array();
  for (const auto& e : a.idempotents()) ids.push_back(encode_residues(e));
  j["idempotents"] = ids;
  ordered_json rad = ordered_json::array();
  for (const auto& r : a.radical().basis()) rad.push_back(encode_residues(r));
  j["radical"] = rad;
  return j;
}

namespace detail {

template <class T>
T field_of(const ordered_json& j, const char* key, const std::string& what) {
  if (!j.contains(key)) throw InputError(what + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const std::exception&) {
    throw InputError(what + ": field '" + key + "' has the wrong type");
  }
}

}  // namespace detail

inline AlgebraPtr algebra_from_json(const ordered_json& j) {
  const std::string what = "algebra";
  auto p = detail::field_of<std::uint64_t>(j, "p", what);
  if (p < 2 || p >= (1ull << 31) || !Field::is_prime(static_cast<std::uint32_t>(p)))
    throw InputError("algebra: p must be a prime below 2^31");
  Field f(static_cast<std::uint32_t>(p));
  auto n = detail::field_of<std::size_t>(j, "dim", what);
  Algebra::Data d;
  d.field = f;
  d.dim = n;
  auto flat = decode_residues(j.at("mult"), f, n * n * n, "algebra mult");
  d.mult.assign(n, std::vector<Vec>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      d.mult[i][k] = Vec(flat.begin() + static_cast<std::ptrdiff_t>((i * n + k) * n),
                         flat.begin() + static_cast<std::ptrdiff_t>((i * n + k + 1) * n));
  d.unit = decode_residues(j.at("unit"), f, n, "algebra unit");
  for (const auto& e : detail::field_of<ordered_json>(j, "idempotents", what))
    d.idempotents.push_back(decode_residues(e, f, n, "algebra idempotent"));
  for (const auto& r : detail::field_of<ordered_json>(j, "radical", what))
    d.radical.push_back(decode_residues(r, f, n, "algebra radical"));
  if (j.contains("labels")) d.labels = detail::field_of<std::vector<std::string>>(j, "labels", what);
  try {
    return std::make_shared<const Algebra>(std::move(d));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

inline ordered_json parse_json(const std::string& text, const std::string& origin) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw InputError(origin + ": " + e.what());
  }
}

inline bool looks_like_json(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{';
  }
  return false;
}

/// Builds an algebra from a presentation, rethrowing failures as input errors.
inline AlgebraPtr algebra_from_presentation(const std::string& text, const std::string& origin) {
  try {
    return quiver::build_algebra(quiver::parse_presentation(text));
  } catch (const quiver::ParseError& e) {
    throw InputError(origin + ":" + std::to_string(e.line()) + ":" + std::to_string(e.column()) + ": " + e.message());
  } catch (const quiver::NonAdmissibleError& e) {
    throw InputError(origin + ": " + e.what());
  }
}

/// Structure-constant JSON or a quiver presentation.
inline AlgebraPtr load_algebra(const std::filesystem::path& path) {
  std::string text = read_file(path);
  if (looks_like_json(text)) return algebra_from_json(parse_json(text, path.string()));
  return algebra_from_presentation(text, path.string());
}

inline ordered_json module_to_json(const LeftModule& m, const std::string& algebra_ref) {
  ordered_json j;
  j["format"] = "trivext-module";
  j["algebra"] = algebra_ref;
  j["dim"] = m.dim;
  ordered_json acts = ordered_json::array();
  for (const auto& a : m.action) acts.push_back(encode_matrix(a));
  j["action"] = acts;
  return j;
}

inline std::filesystem::path resolve_ref(const std::filesystem::path& base, const std::string& ref) {
  std::filesystem::path p(ref);
  return p.is_absolute() ? p : base.parent_path() / p;
}

/// A left module over `alg`: explicit action matrices, or one of
/// {"simple": i}, {"projective": i}, {"injective": i}, {"regular": true}.
inline LeftModule module_from_json(const ordered_json& j, const AlgebraPtr& alg) {
  auto vertex = [&](const char* key) {
    auto v = detail::field_of<std::size_t>(j, key, "module");
    if (v >= alg->num_idempotents()) throw InputError("module: vertex " + std::to_string(v) + " out of range");
    return v;
  };
  try {
    if (j.contains("simple")) return simple_module(alg, vertex("simple"));
    if (j.contains("projective")) {
      auto v = vertex("projective");
      return corner(alg, v, v).Ae;
    }
    if (j.contains("injective")) {
      auto v = vertex("injective");
      return linear_dual(corner(alg, v, v).eA);
    }
    if (j.contains("regular")) return regular_module(alg);
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("module: ") + e.what());
  }
  auto n = detail::field_of<std::size_t>(j, "dim", "module");
  auto acts = detail::field_of<ordered_json>(j, "action", "module");
  if (!acts.is_array() || acts.size() != alg->dim())
    throw InputError("module: expected " + std::to_string(alg->dim()) + " action matrices");
  LeftModule m{alg, n, {}};
  for (std::size_t i = 0; i < acts.size(); ++i)
    m.action.push_back(decode_matrix(acts[i], alg->field(), n, n, "module action " + std::to_string(i)));
  if (auto v = check_module(m)) throw InputError("module: " + v->what);
  return m;
}

inline LeftModule load_module(const std::filesystem::path& path, const AlgebraPtr& alg) {
  return module_from_json(parse_json(read_file(path), path.string()), alg);
}

inline ordered_json bimodule_to_json(const Bimodule& b, const std::string& left_ref, const std::string& right_ref) {
  ordered_json j;
  j["format"] = "trivext-bimodule";
  j["left"] = left_ref;
  j["right"] = right_ref;
  j["dim"] = b.dim;
  ordered_json la = ordered_json::array(), ra = ordered_json::array();
  for (const auto& a : b.left_action) la.push_back(encode_matrix(a));
  for (const auto& a : b.right_action) ra.push_back(encode_matrix(a));
  j["left_action"] = la;
  j["right_action"] = ra;
  return j;
}

/// A bimodule file; "left" and "right" reference algebra files relative to the bimodule file.
/// Besides explicit action tables, "construct" may be "left_projective" (A e_v over (A, k)),
/// "right_projective" (e_v A over (k, A)), "left_simple", "right_simple", "regular" or
/// "ground" (k^dim over (k, k)).
inline Bimodule load_bimodule(const std::filesystem::path& path) {
  ordered_json j = parse_json(read_file(path), path.string());
  AlgebraPtr left = load_algebra(resolve_ref(path, detail::field_of<std::string>(j, "left", "bimodule")));
  AlgebraPtr right = load_algebra(resolve_ref(path, detail::field_of<std::string>(j, "right", "bimodule")));
  if (j.contains("construct")) {
    auto kind = detail::field_of<std::string>(j, "construct", "bimodule");
    auto vertex = [&](const AlgebraPtr& a) {
      auto v = detail::field_of<std::size_t>(j, "vertex", "bimodule");
      if (v >= a->num_idempotents()) throw InputError("bimodule: vertex out of range");
      return v;
    };
    if (kind == "left_projective") {
      if (right->dim() != 1) throw InputError("bimodule: left_projective needs the ground field on the right");
      auto v = vertex(left);
      return left_as_bimodule(corner(left, v, v).Ae, right);
    }
    if (kind == "right_projective") {
      if (left->dim() != 1) throw InputError("bimodule: right_projective needs the ground field on the left");
      auto v = vertex(right);
      return right_as_bimodule(corner(right, v, v).eA, left);
    }
    if (kind == "right_simple") {
      if (left->dim() != 1) throw InputError("bimodule: right_simple needs the ground field on the left");
      return right_as_bimodule(linear_dual(simple_module(right, vertex(right))), left);
    }
    if (kind == "left_simple") {
      if (right->dim() != 1) throw InputError("bimodule: left_simple needs the ground field on the right");
      return left_as_bimodule(simple_module(left, vertex(left)), right);
    }
    if (kind == "regular") {
      if (!same_algebra(*left, *right)) throw InputError("bimodule: regular needs equal algebras");
      return regular_bimodule(left);
    }
    if (kind == "ground") {
      if (left->dim() != 1 || right->dim() != 1) throw InputError("bimodule: ground needs the ground field on both sides");
      return ground_bimodule(left, detail::field_of<std::size_t>(j, "dim", "bimodule"));
    }
    throw InputError("bimodule: unknown construct '" + kind + "'");
  }
  auto n = detail::field_of<std::size_t>(j, "dim", "bimodule");
  auto la = detail::field_of<ordered_json>(j, "left_action", "bimodule");
  auto ra = detail::field_of<ordered_json>(j, "right_action", "bimodule");
  if (!la.is_array() || la.size() != left->dim() || !ra.is_array() || ra.size() != right->dim())
    throw InputError("bimodule: one action matrix per basis element of each algebra is required");
  Bimodule b{left, right, n, {}, {}};
  for (std::size_t i = 0; i < la.size(); ++i)
    b.left_action.push_back(decode_matrix(la[i], left->field(), n, n, "bimodule left action"));
  for (std::size_t i = 0; i < ra.size(); ++i)
    b.right_action.push_back(decode_matrix(ra[i], right->field(), n, n, "bimodule right action"));
  if (auto v = bimodule_check(b)) throw InputError("bimodule: " + v->what);
  return b;
}

struct BundleOptions {
  std::size_t pd_bound = 20;
  std::size_t max_stage = 24;
  std::size_t window = 4;
  std::uint64_t seed = 0;
  std::size_t trials = 64;
};

struct Bundle {
  AlgebraPtr a;
  AlgebraPtr b;
  Bimodule x;
  Bimodule y;
  BundleOptions options;
  std::string name;
};

/// {"A": ..., "B": ..., "X": ..., "Y": ..., "options": {...}} with paths relative to the bundle.
inline Bundle load_bundle(const std::filesystem::path& path) {
  ordered_json j = parse_json(read_file(path), path.string());
  Bundle b;
  b.name = j.value("name", path.stem().string());
  b.a = load_algebra(resolve_ref(path, detail::field_of<std::string>(j, "A", "bundle")));
  b.b = load_algebra(resolve_ref(path, detail::field_of<std::string>(j, "B", "bundle")));
  b.x = load_bimodule(resolve_ref(path, detail::field_of<std::string>(j, "X", "bundle")));
  b.y = load_bimodule(resolve_ref(path, detail::field_of<std::string>(j, "Y", "bundle")));
  if (j.contains("options")) {
    const auto& o = j.at("options");
    b.options.pd_bound = o.value("pd_bound", b.options.pd_bound);
    b.options.max_stage = o.value("max_stage", b.options.max_stage);
    b.options.window = o.value("window", b.options.window);
    b.options.seed = o.value("seed", b.options.seed);
    b.options.trials = o.value("trials", b.options.trials);
  }
  return b;
}

}  // namespace trivext::io
