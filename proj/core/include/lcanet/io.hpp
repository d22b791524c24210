#pragma once

#include <iosfwd>
#include <string>

#include "lcanet/dag.hpp"
#include "lcanet/relation.hpp"

namespace lcanet {

// Constraint files. '#' lines are comments, blank lines are skipped. An
// optional first significant line "leaves: a b c" declares extra leaves.
// Every other line is "A B < X Y": four leaf names meaning (AB, XY) in R.
// Singletons are written by repetition ("A A < X Y"). The leaf set is the
// header names plus every name in a constraint. Throws ParseError.
//
// Incomparability files use the same shape with separator "<>" instead of
// "<"; pass it as the separator argument.
Relation parse_constraints(std::istream& in, const std::string& filename,
                           const std::string& separator = "<");
Relation parse_constraints_file(const std::string& path,
                                const std::string& separator = "<");

// Lines sorted by (PairId, PairId), LF endings. The "leaves:" header is
// emitted only when some leaf occurs in no constraint line (otherwise the
// leaf set is already implied, and closure output stays exactly the fact
// lines).
std::string serialize_constraints(const Relation& R, const std::string& separator = "<");

// DAG files. Same comment and header rules; arc lines are "U -> V" with the
// arc pointing parent to child. Sinks must be exactly the leaf set (declared
// names plus implied sinks); duplicate arcs and cycles are rejected.
Dag parse_dag(std::istream& in, const std::string& filename);
Dag parse_dag_file(const std::string& path);

// Always emits the "leaves:" header (isolated leaves would otherwise be
// lost), then one line per arc, parents in vertex order, children sorted.
std::string serialize_dag(const Dag& G);

// Graphviz: leaves are boxes, internal vertices ellipses (with the vertex
// note as tooltip when present), "_root" a point.
std::string to_dot(const Dag& G);

} // namespace lcanet
