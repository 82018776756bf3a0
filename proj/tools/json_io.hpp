#pragma once
// JSON schemas for every object the CLI reads or writes. Rationals are always strings.
// Parse errors name the offending field by its path from the document root.

#include <json.hpp>

#include <optional>
#include <string>
#include <string_view>

#include "crossmod/dirac.hpp"
#include "crossmod/fixtures.hpp"

namespace crossmod::cli {

using Json = nlohmann::ordered_json;

class SchemaError : public Error {
 public:
  SchemaError(std::string field, const std::string& message)
      : Error(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// A JSON value together with its path, for diagnostics.
class Node {
 public:
  Node(const Json& value, std::string path) : value_(&value), path_(std::move(path)) {}

  const Json& json() const { return *value_; }
  const std::string& path() const { return path_; }
  [[noreturn]] void fail(const std::string& message) const { throw SchemaError(path_, message); }

  bool has(std::string_view key) const;
  Node at(std::string_view key) const;
  std::optional<Node> find(std::string_view key) const;
  Node operator[](std::size_t i) const;
  std::size_t size() const;

  long integer() const;
  /// Integer in [0, bound).
  int index(std::size_t bound) const;
  std::size_t count() const;
  std::string string() const;
  Scalar scalar(Field f) const;
  Vec vec(Field f, std::optional<std::size_t> length = std::nullopt) const;
  /// Row-major nested arrays; an empty array is a rows x cols zero matrix when shape is given.
  Mat mat(Field f, std::optional<std::size_t> rows = std::nullopt, std::optional<std::size_t> cols = std::nullopt) const;
  std::vector<int> indices(std::size_t bound) const;

  /// "schema" is optional on nested blocks; when present it must match.
  void expect_schema(std::string_view name) const;

 private:
  const Json* value_;
  std::string path_;
};

/// Parsed file with its raw bytes (for the input digest).
struct Document {
  Json json;
  std::string bytes;
  std::string name;

  Node root() const { return Node(json, "$"); }
};

/// Throws SchemaError("$", ...) for unreadable or malformed files.
Document load_document(const std::string& path);

Field field_of(const Node& n);

LieAlg parse_lie_algebra(const Node& n, Field f);
LieCrossedModule parse_lie_cm(const Node& n, Field f);
FinGroup parse_group(const Node& n);
FinCrossedModule parse_fin_cm(const Node& n);
MatCrossedModule parse_mat_cm(const Node& n);
/// Replaces the samples of cm.
void apply_sample_set(const Node& n, MatCrossedModule& cm);
Bivector parse_bivector(const Node& n, Field f, std::optional<std::size_t> dim = std::nullopt);
Subspace parse_subspace(const Node& n, Field f, std::optional<std::size_t> ambient = std::nullopt);
LieBialgebra parse_bialgebra(const Node& n);
Lie2Bialgebra parse_2bialgebra(const Node& n);
CharPair parse_char_pair(const Node& n, std::size_t dim);
TwoSubgroup parse_two_subgroup(const Node& n, const FinCrossedModule& cm);
FinGroupoid parse_groupoid(const Node& n);
Fin2GroupAction parse_action(const Node& n, const Fin2Group& g);
TwoVectSpace parse_two_vector_space(const Node& n);
Rep parse_rep(const Node& n, const TwoVectSpace& v, const FinCrossedModule& cm);

/// Kind tag of a crossed_module document: "lie", "finite" or "matrix".
std::string crossed_module_kind(const Node& n);

Json to_json(const Scalar& s);
Json to_json(const Vec& v);
Json to_json(const Mat& m);
Json to_json(const LieAlg& l);
Json to_json(const LieCrossedModule& cm);
Json to_json(const FinGroup& g);
Json to_json(const FinCrossedModule& cm);
Json to_json(const MatCrossedModule& cm);
Json to_json(const Multivector& m);
Json to_json(const Subspace& s);
Json to_json(const LieBialgebra& b);
Json to_json(const Lie2Bialgebra& tb);
Json to_json(const TwoSubgroup& h);
Json to_json(const FinGroupoid& p);
Json to_json(const TwoVectSpace& v);
Json to_json(const Rep& rep);

}  // namespace crossmod::cli
