#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "holobrace/brace.hpp"
#include "holobrace/enumeration.hpp"
#include "holobrace/hgs.hpp"

namespace holobrace {

/// Largest p accepted without the force flag.
inline constexpr unsigned kDefaultMaxPrime = 5;

/// A rendered result: integer cells keyed by (row, column) plus a per-row
/// status and an overall closed-form verdict.
struct Table {
  struct Row {
    std::string label;
    std::vector<std::int64_t> values;
    bool ok = true;
    std::string note;
  };

  unsigned p = 0;
  std::string corner;
  std::vector<std::string> columns;
  std::vector<Row> rows;
  bool closed_form_match = true;
  std::string ok_word = "ok";
  std::string bad_word = "mismatch";

  std::string to_tsv() const;
  /// {"p": int, "table": [{"row", "col", "value"}], "closed_form_match": bool}
  std::string to_json() const;
};

/// Lazily computed enumeration data for one prime.
class Session {
 public:
  /// Throws Error{InvalidArgument} unless p is an odd prime and
  /// Error{TooLarge} when p > kDefaultMaxPrime without force.
  Session(unsigned p, bool force);

  unsigned p() const noexcept { return p_; }
  bool force() const noexcept { return force_; }

  const FiniteGroup& group(Variant2p2 v);
  const Holomorph& holomorph(Variant2p2 v);
  const std::vector<HolSubgroup>& semiregular(Variant2p2 v);
  const std::vector<RegularSubgroupRecord>& regular(Variant2p2 v);
  const std::vector<BraceClass>& braces(Variant2p2 v);
  const TransitiveSubgroups& transitive();
  const CyclicTypeReport& cyclic_report();
  const HgsCountTable& galois();

 private:
  unsigned p_;
  bool force_;
  std::array<std::optional<FiniteGroup>, 5> groups_;
  std::array<std::optional<Holomorph>, 5> hols_;
  std::array<std::optional<std::vector<HolSubgroup>>, 5> semiregular_;
  std::array<std::optional<std::vector<RegularSubgroupRecord>>, 5> regular_;
  std::array<std::optional<std::vector<BraceClass>>, 5> braces_;
  std::optional<TransitiveSubgroups> transitive_;
  std::optional<CyclicTypeReport> cyclic_;
  std::optional<HgsCountTable> galois_;
};

/// Accepts variant tokens (C2p2, CpxD2p, ...), labels at p (C18, D18, ...)
/// and the words cyclic and dihedral, case-insensitively.
std::optional<Variant2p2> parse_variant(std::string_view text, unsigned p);

Table groups_table(Session& s);
Table hgs_table(Session& s);
Table transitive_table(Session& s);
Table brace_summary_table(Session& s);
Table braces_table(Session& s, std::optional<Variant2p2> additive);
Table cyclic_type_table(Session& s);

/// Every closed-form comparison and structural property for the session's
/// prime; one row per check, value 1 on pass.
Table verify_table(Session& s);

/// Dispatches on the command name (groups, hgs-table, transitive-table,
/// brace-summary, braces, cyclic-type, verify). Throws
/// Error{InvalidArgument} for an unknown command or additive filter.
Table render_command(Session& s, std::string_view command, std::string_view additive = {});

}  // namespace holobrace
