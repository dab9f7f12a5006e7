#pragma once

#include "rly/serialize.hpp"

#include <map>
#include <string>
#include <vector>

namespace rly {

enum class ObjectKind { Algebra, Operator, Representation, Cochain, Deformation, Extension };

std::string_view to_string(ObjectKind k);

struct OperatorEntry {
  std::string algebra;
  ReynoldsOperator op;
};

struct RepEntry {
  std::string algebra;
  std::string op;  // empty when no operator is attached
  Representation rep;
};

struct CochainEntry {
  std::string algebra;
  std::string rep;
  std::string op;
  ComplexKind complex = ComplexKind::LY;
  std::size_t degree = 1;
  Vec coords;
};

struct DeformationEntry {
  std::string algebra;
  std::string op;
  TruncatedDeformation def;
};

/// Either a cocycle over (algebra, op, rep) or an explicit total algebra with
/// its operator and the inject/project maps.
struct ExtensionEntry {
  std::string algebra;
  std::string op;
  std::string rep;
  ExtensionCocycle cocycle;
  std::optional<AbelianExtension> total;
};

/// Named objects read from one or more JSON documents. Names are unique across
/// all kinds and may refer to objects in any loaded document. See docs/format.md.
class Workspace {
 public:
  /// Throws ParseError (with file, line and column), NameNotFound, DimMismatch,
  /// InvalidInput.
  static Workspace load(const std::vector<std::string>& paths);
  static Workspace from_text(const std::vector<std::pair<std::string, std::string>>& sources);

  std::optional<ObjectKind> kind_of(const std::string& name) const;

  /// Throw NameNotFound.
  const LyAlgebra& algebra(const std::string& name) const;
  const OperatorEntry& op(const std::string& name) const;
  const RepEntry& rep(const std::string& name) const;
  const CochainEntry& cochain(const std::string& name) const;
  const DeformationEntry& deformation(const std::string& name) const;
  const ExtensionEntry& extension(const std::string& name) const;

  const std::map<std::string, DeformationEntry>& deformations() const { return deformations_; }
  const std::map<std::string, ExtensionEntry>& extensions() const { return extensions_; }

 private:
  std::map<std::string, LyAlgebra> algebras_;
  std::map<std::string, OperatorEntry> ops_;
  std::map<std::string, RepEntry> reps_;
  std::map<std::string, CochainEntry> cochains_;
  std::map<std::string, DeformationEntry> deformations_;
  std::map<std::string, ExtensionEntry> extensions_;
  std::map<std::string, ObjectKind> kinds_;

  friend class WorkspaceBuilder;
};

}  // namespace rly
