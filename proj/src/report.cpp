#include "holobrace/report.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "holobrace/aut.hpp"
#include "holobrace/catalog.hpp"
#include "holobrace/tables.hpp"

namespace holobrace {

std::string Table::to_tsv() const {
  std::ostringstream out;
  out << corner;
  for (const auto& c : columns) out << '\t' << c;
  out << "\tstatus\n";
  for (const auto& r : rows) {
    out << r.label;
    for (auto v : r.values) out << '\t' << v;
    out << '\t' << (r.ok ? ok_word : bad_word);
    if (!r.note.empty()) out << '\t' << r.note;
    out << '\n';
  }
  return out.str();
}

std::string Table::to_json() const {
  nlohmann::ordered_json doc;
  doc["p"] = p;
  doc["table"] = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    for (std::size_t c = 0; c < columns.size() && c < r.values.size(); ++c)
      doc["table"].push_back({{"row", r.label}, {"col", columns[c]}, {"value", r.values[c]}});
  doc["closed_form_match"] = closed_form_match;
  return doc.dump(2) + "\n";
}

Session::Session(unsigned p, bool force) : p_(p), force_(force) {
  if (!is_odd_prime(p)) throw Error(ErrorKind::InvalidArgument, "p must be an odd prime");
  if (p > kDefaultMaxPrime && !force)
    throw Error(ErrorKind::TooLarge, "p = " + std::to_string(p) + " exceeds the default budget; pass --force to run it");
}

const FiniteGroup& Session::group(Variant2p2 v) {
  auto& slot = groups_[variant_index(v)];
  if (!slot) slot = build_2p2(v, p_);
  return *slot;
}

const Holomorph& Session::holomorph(Variant2p2 v) {
  auto& slot = hols_[variant_index(v)];
  if (!slot) slot = build_holomorph(group(v), force_);
  return *slot;
}

const std::vector<HolSubgroup>& Session::semiregular(Variant2p2 v) {
  auto& slot = semiregular_[variant_index(v)];
  if (!slot) slot = semiregular_p2_subgroups(holomorph(v));
  return *slot;
}

const std::vector<RegularSubgroupRecord>& Session::regular(Variant2p2 v) {
  auto& slot = regular_[variant_index(v)];
  if (!slot) slot = regular_subgroups(holomorph(v));
  return *slot;
}

const std::vector<BraceClass>& Session::braces(Variant2p2 v) {
  auto& slot = braces_[variant_index(v)];
  if (!slot) slot = classify_braces(holomorph(v), regular(v));
  return *slot;
}

const TransitiveSubgroups& Session::transitive() {
  if (!transitive_) transitive_ = transitive_subgroups_cyclic_hol(p_);
  return *transitive_;
}

const CyclicTypeReport& Session::cyclic_report() {
  if (!cyclic_) cyclic_ = cyclic_type_report(transitive());
  return *cyclic_;
}

const HgsCountTable& Session::galois() {
  if (!galois_) {
    std::array<std::vector<RegularSubgroupRecord>, 5> regs;
    std::array<std::uint64_t, 5> aut{};
    for (auto v : kAllVariants) {
      regs[variant_index(v)] = regular(v);
      aut[variant_index(v)] = holomorph(v).auts().size();
    }
    galois_ = galois_table(p_, regs, aut);
  }
  return *galois_;
}

std::optional<Variant2p2> parse_variant(std::string_view text, unsigned p) {
  std::string t;
  for (char c : text) t.push_back(char(std::tolower(static_cast<unsigned char>(c))));
  if (t == "cyclic") return Variant2p2::Cyclic;
  if (t == "dihedral") return Variant2p2::Dihedral;
  for (auto v : kAllVariants) {
    std::string token(variant_token(v)), label = type_label(v, p);
    for (auto* s : {&token, &label})
      std::transform(s->begin(), s->end(), s->begin(), [](unsigned char c) { return char(std::tolower(c)); });
    if (t == token || t == label) return v;
  }
  return std::nullopt;
}

namespace {

std::vector<std::string> type_labels(unsigned p) {
  std::vector<std::string> out;
  for (auto v : kAllVariants) out.push_back(type_label(v, p));
  return out;
}

Table matrix_table(unsigned p, const std::string& corner, const VariantMatrix& computed, const VariantMatrix& expected) {
  Table t;
  t.p = p;
  t.corner = corner;
  t.columns = type_labels(p);
  for (std::size_t r = 0; r < 5; ++r) {
    Table::Row row;
    row.label = t.columns[r];
    for (std::size_t c = 0; c < 5; ++c) {
      row.values.push_back(std::int64_t(computed[r][c]));
      if (computed[r][c] != expected[r][c]) {
        row.ok = false;
        row.note += (row.note.empty() ? "expected " : ", ") + t.columns[c] + "=" + std::to_string(expected[r][c]);
      }
    }
    t.closed_form_match = t.closed_form_match && row.ok;
    t.rows.push_back(std::move(row));
  }
  return t;
}

using InvariantKey = std::tuple<Variant2p2, std::uint64_t, std::uint64_t, std::uint64_t>;

std::map<InvariantKey, std::uint64_t> computed_brace_rows(const std::vector<BraceClass>& classes) {
  std::map<InvariantKey, std::uint64_t> out;
  for (const auto& c : classes)
    ++out[{c.invariants.multiplicative_type.variant, c.invariants.socle.size(), c.invariants.annihilator.size(),
           c.invariants.aut_order}];
  return out;
}

std::map<InvariantKey, std::uint64_t> published_brace_rows(Variant2p2 additive, unsigned p) {
  std::map<InvariantKey, std::uint64_t> out;
  for (const auto& r : closed_form_brace_rows(additive, p))
    out[{r.multiplicative, r.socle, r.annihilator, r.aut_order}] += r.count;
  return out;
}

std::string describe_rows(const std::map<InvariantKey, std::uint64_t>& rows, unsigned p) {
  std::string out;
  for (const auto& [key, count] : rows) {
    const auto& [v, soc, ann, aut] = key;
    if (!out.empty()) out += "; ";
    out += std::to_string(count) + "x(" + type_label(v, p) + "," + std::to_string(soc) + "," + std::to_string(ann) +
           "," + std::to_string(aut) + ")";
  }
  return out;
}

}  // namespace

Table groups_table(Session& s) {
  Table t;
  t.p = s.p();
  t.corner = "group";
  t.columns = {"order", "aut", "aut_closed_form"};
  for (auto v : kAllVariants) {
    const auto& hol = s.holomorph(v);
    const auto expected = aut_order_closed_form(v, s.p());
    Table::Row row;
    row.label = type_label(v, s.p());
    row.values = {std::int64_t(hol.degree()), std::int64_t(hol.auts().size()), std::int64_t(expected)};
    row.ok = hol.auts().size() == expected;
    t.closed_form_match = t.closed_form_match && row.ok;
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table hgs_table(Session& s) { return matrix_table(s.p(), "G\\N", s.galois().a, closed_form_hgs_counts(s.p())); }

Table transitive_table(Session& s) {
  return matrix_table(s.p(), "G\\N", s.galois().b, closed_form_regular_counts(s.p()));
}

Table brace_summary_table(Session& s) {
  VariantMatrix counts{};
  for (auto add : kAllVariants)
    for (const auto& c : s.braces(add))
      ++counts[variant_index(c.invariants.multiplicative_type.variant)][variant_index(add)];
  return matrix_table(s.p(), "mult\\add", counts, closed_form_brace_counts(s.p()));
}

Table braces_table(Session& s, std::optional<Variant2p2> additive) {
  Table t;
  t.p = s.p();
  t.corner = "brace";
  t.columns = {"soc", "ann", "aut", "orbit"};
  for (auto add : kAllVariants) {
    if (additive && *additive != add) continue;
    const auto& classes = s.braces(add);
    const auto computed = computed_brace_rows(classes);
    const auto published = published_brace_rows(add, s.p());
    const bool match = computed == published;
    t.closed_form_match = t.closed_form_match && match;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& inv = classes[i].invariants;
      Table::Row row;
      row.label = "add:" + type_label(add, s.p()) + " mult:" + type_label(inv.multiplicative_type.variant, s.p()) +
                  " #" + std::to_string(i);
      row.values = {std::int64_t(inv.socle.size()), std::int64_t(inv.annihilator.size()),
                    std::int64_t(inv.aut_order), std::int64_t(classes[i].orbit_size())};
      const InvariantKey key{inv.multiplicative_type.variant, inv.socle.size(), inv.annihilator.size(), inv.aut_order};
      const auto it = published.find(key);
      row.ok = it != published.end() && it->second == computed.at(key);
      t.rows.push_back(std::move(row));
    }
  }
  return t;
}

Table cyclic_type_table(Session& s) {
  Table t;
  t.p = s.p();
  t.corner = "class";
  t.columns = {"order", "stabilizer", "family", "d", "aut_pair", "b", "a", "expected_a"};
  for (const auto& e : s.cyclic_report().entries) {
    Table::Row row;
    if (e.family == 0)
      row.label = type_label(e.has_cyclic_core ? Variant2p2::Cyclic : Variant2p2::Dihedral, s.p());
    else
      row.label = "C" + std::to_string(e.m) + ":C" + std::to_string(e.k);
    row.values = {std::int64_t(e.order),          std::int64_t(e.stabilizer_order), e.family,
                  std::int64_t(e.d),              std::int64_t(e.count.aut_pair),   std::int64_t(e.count.b),
                  std::int64_t(e.count.a),        std::int64_t(e.expected_a)};
    row.ok = e.count.a == e.expected_a;
    t.closed_form_match = t.closed_form_match && row.ok;
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

struct Checklist {
  Table table;

  void add(const std::string& name, const std::function<std::string()>& check) {
    Table::Row row;
    row.label = name;
    try {
      row.note = check();
      row.ok = row.note.empty();
    } catch (const std::exception& e) {
      row.ok = false;
      row.note = e.what();
    }
    row.values = {row.ok ? 1 : 0};
    table.closed_form_match = table.closed_form_match && row.ok;
    table.rows.push_back(std::move(row));
  }
};

std::string join_failures(const std::vector<std::string>& failures) {
  std::string out;
  for (std::size_t i = 0; i < failures.size() && i < 4; ++i) out += (i ? "; " : "") + failures[i];
  if (failures.size() > 4) out += "; +" + std::to_string(failures.size() - 4) + " more";
  return out;
}

// Brace properties checked on one regular subgroup.
std::string brace_properties(const Holomorph& hol, const RegularSubgroupRecord& rec, unsigned p) {
  const SkewBrace b = brace_from_regular(hol, rec.subgroup);
  if (!brace_law_holds(b)) return "brace law fails";
  const Subgroup soc = socle(b), ann = annihilator(b);
  const Subgroup z = center(b.add);
  for (Elem x : soc.elements)
    if (!z.contains(x)) return "Soc(B) not central in (B,.)";
  if (!is_subgroup(b.add, soc) || !is_subgroup(b.circ, soc) || !is_normal(b.circ, soc))
    return "Soc(B) not normal in (B,o)";
  for (Elem x : ann.elements)
    if (!soc.contains(x)) return "Ann(B) not inside Soc(B)";
  if (!is_normal(b.add, ann) || !is_normal(b.circ, ann)) return "Ann(B) not normal";
  if (!(classify_2p2(b.circ, p) == rec.iso_type)) return "multiplicative type differs from the record tag";
  return {};
}

}  // namespace

Table verify_table(Session& s) {
  const unsigned p = s.p();
  Checklist list;
  list.table.p = p;
  list.table.corner = "check";
  list.table.columns = {"pass"};
  list.table.ok_word = "PASS";
  list.table.bad_word = "FAIL";

  list.add("catalog-groups", [&] {
    std::vector<std::string> bad;
    for (auto v : kAllVariants) {
      const auto& g = s.group(v);
      if (g.order() != 2ull * p * p) bad.push_back(g.label() + " has wrong order");
      if (closure(g, g.generators()).size() != g.order()) bad.push_back(g.label() + " generators fall short");
      for (Elem x = 0; x < g.order(); ++x)
        if (g.order() % element_order(g, x) != 0) bad.push_back(g.label() + " violates Lagrange");
      if (!is_normal(g, center(g))) bad.push_back(g.label() + " centre not normal");
      if (!(classify_2p2(g, p).variant == v)) bad.push_back(g.label() + " misclassified");
      for (auto w : kAllVariants)
        if (find_isomorphisms(g, s.group(w), 1).empty() == (v == w))
          bad.push_back(g.label() + " vs " + s.group(w).label() + " isomorphism test wrong");
    }
    return join_failures(bad);
  });

  list.add("aut-orders", [&] {
    std::vector<std::string> bad;
    for (auto v : kAllVariants) {
      const auto n = s.holomorph(v).auts().size(), e = aut_order_closed_form(v, p);
      if (n != e) bad.push_back(type_label(v, p) + ": " + std::to_string(n) + " != " + std::to_string(e));
    }
    return join_failures(bad);
  });

  list.add("lambda-regular", [&] {
    std::vector<std::string> bad;
    for (auto v : kAllVariants) {
      const auto& hol = s.holomorph(v);
      const auto lam = lambda_embed(hol);
      if (!action_profile(hol, lam).regular) bad.push_back(type_label(v, p) + " lambda(N) not regular");
      const auto& regs = s.regular(v);
      if (std::none_of(regs.begin(), regs.end(), [&](const auto& r) { return r.subgroup == lam; }))
        bad.push_back(type_label(v, p) + " lambda(N) not enumerated");
    }
    return join_failures(bad);
  });

  list.add("semiregular-counts", [&] {
    std::vector<std::string> bad;
    const auto expected = closed_form_semiregular_counts(p);
    for (auto v : kAllVariants) {
      const auto n = s.semiregular(v).size();
      if (n != expected[variant_index(v)])
        bad.push_back(type_label(v, p) + ": " + std::to_string(n) + " != " + std::to_string(expected[variant_index(v)]));
    }
    return join_failures(bad);
  });

  list.add("regular-counts", [&] {
    const auto t = transitive_table(s);
    std::vector<std::string> bad;
    for (const auto& r : t.rows)
      if (!r.ok) bad.push_back(r.label + " " + r.note);
    return join_failures(bad);
  });

  list.add("regular-records", [&] {
    std::vector<std::string> bad;
    for (auto v : kAllVariants) {
      const auto& hol = s.holomorph(v);
      const auto& semi = s.semiregular(v);
      for (const auto& r : s.regular(v)) {
        const auto prof = action_profile(hol, r.subgroup);
        bool ok = prof.regular && r.sylow_core.size() == std::size_t(p) * p &&
                  action_profile(hol, r.sylow_core).semiregular &&
                  std::binary_search(semi.begin(), semi.end(), r.sylow_core);
        for (Elem x : r.sylow_core.elements) ok = ok && r.subgroup.contains(x);
        if (ok) {
          std::vector<Elem> gens = hol_subgroup_generators(hol, r.sylow_core);
          gens.push_back(r.extending_involution);
          ok = hol_closure(hol, gens) == std::optional<HolSubgroup>(r.subgroup);
        }
        if (!ok) {
          bad.push_back(type_label(v, p) + " record invalid");
          break;
        }
      }
    }
    return join_failures(bad);
  });

  list.add("classifier-cross-check", [&] {
    std::vector<std::string> bad;
    for (auto v : kAllVariants) {
      const auto& hol = s.holomorph(v);
      std::set<Variant2p2> sampled;
      for (const auto& r : s.regular(v)) {
        if (p > 3 && !sampled.insert(r.iso_type.variant).second) continue;
        const auto g = hol_subgroup_as_group(hol, r.subgroup, "G");
        if (find_isomorphisms(g, s.group(r.iso_type.variant), 1).empty()) {
          bad.push_back(type_label(v, p) + " record tagged " + type_label(r.iso_type.variant, p) + " is not");
          break;
        }
      }
    }
    return join_failures(bad);
  });

  list.add("oracle-equality", [&] {
    std::vector<std::string> bad;
    std::size_t compared = 0;
    for (auto v : kAllVariants) {
      const auto& hol = s.holomorph(v);
      if (hol.order() > kOracleBound) continue;
      ++compared;
      std::vector<HolSubgroup> pruned;
      for (const auto& r : s.regular(v)) pruned.push_back(r.subgroup);
      if (pruned != regular_subgroups_oracle(hol)) bad.push_back(type_label(v, p) + " differs from the oracle");
    }
    if (compared == 0) bad.push_back("no holomorph small enough for the oracle");
    return join_failures(bad);
  });

  list.add("hgs-table", [&] {
    const auto t = hgs_table(s);
    std::vector<std::string> bad;
    for (const auto& r : t.rows)
      if (!r.ok) bad.push_back(r.label + " " + r.note);
    return join_failures(bad);
  });

  list.add("byott-identity", [&] {
    const auto& t = s.galois();
    std::vector<std::string> bad;
    for (std::size_t g = 0; g < 5; ++g)
      for (std::size_t n = 0; n < 5; ++n)
        if (t.a[g][n] * t.aut[n] != t.aut[g] * t.b[g][n])
          bad.push_back("cell " + type_label(kAllVariants[g], p) + "," + type_label(kAllVariants[n], p));
    if (t.a[2] != t.a[3]) bad.push_back("rows " + type_label(Variant2p2::CpxC2p, p) + " and " +
                                        type_label(Variant2p2::CpxD2p, p) + " differ");
    return join_failures(bad);
  });

  list.add("brace-summary", [&] {
    const auto t = brace_summary_table(s);
    std::vector<std::string> bad;
    for (const auto& r : t.rows)
      if (!r.ok) bad.push_back(r.label + " " + r.note);
    return join_failures(bad);
  });

  for (auto add : kAllVariants) {
    list.add("brace-invariants-" + std::string(variant_token(add)), [&, add] {
      const auto computed = computed_brace_rows(s.braces(add));
      const auto published = published_brace_rows(add, p);
      if (computed == published) return std::string{};
      return "computed " + describe_rows(computed, p) + " | published " + describe_rows(published, p);
    });
  }

  list.add("brace-orbits", [&] {
    std::vector<std::string> bad;
    for (auto add : kAllVariants) {
      const auto& hol = s.holomorph(add);
      std::size_t total = 0;
      for (const auto& c : s.braces(add)) {
        total += c.orbit_size();
        if (c.orbit_size() * c.invariants.aut_order != hol.auts().size())
          bad.push_back(type_label(add, p) + " orbit-stabilizer fails");
      }
      if (total != s.regular(add).size()) bad.push_back(type_label(add, p) + " orbits do not cover the regular subgroups");
    }
    return join_failures(bad);
  });

  list.add("brace-aut-dual", [&] {
    std::vector<std::string> bad;
    for (auto add : kAllVariants) {
      const auto& hol = s.holomorph(add);
      for (const auto& c : s.braces(add)) {
        const auto& g = s.regular(add)[c.representative].subgroup;
        const auto a1 = brace_aut_order(hol, g), a2 = brace_aut_order_direct(hol, c.brace);
        if (a1 != c.invariants.aut_order || a2 != a1) bad.push_back(type_label(add, p) + " class aut orders disagree");
      }
    }
    return join_failures(bad);
  });

  list.add("brace-axioms", [&] {
    std::vector<std::string> bad;
    for (auto add : kAllVariants) {
      const auto& hol = s.holomorph(add);
      const auto& regs = s.regular(add);
      if (p <= 3) {
        for (const auto& r : regs)
          if (auto msg = brace_properties(hol, r, p); !msg.empty()) bad.push_back(type_label(add, p) + ": " + msg);
      } else {
        for (const auto& c : s.braces(add))
          if (auto msg = brace_properties(hol, regs[c.representative], p); !msg.empty())
            bad.push_back(type_label(add, p) + ": " + msg);
      }
    }
    return join_failures(bad);
  });

  list.add("transitive-classes", [&] {
    std::vector<std::string> bad;
    const auto& ts = s.transitive();
    std::set<std::size_t> regular_classes;
    std::vector<HolSubgroup> trivially_stabilized;
    for (const auto& r : ts.records) {
      if (r.stabilizer.size() != r.order / ts.hol.degree()) bad.push_back("stabilizer order mismatch");
      if (r.stabilizer.size() == 1) {
        regular_classes.insert(r.pair_class_id);
        trivially_stabilized.push_back(r.subgroup);
      }
    }
    if (regular_classes.size() != 2)
      bad.push_back(std::to_string(regular_classes.size()) + " regular pair-classes instead of 2");
    std::vector<HolSubgroup> regs;
    for (const auto& r : s.regular(Variant2p2::Cyclic)) regs.push_back(r.subgroup);
    std::sort(trivially_stabilized.begin(), trivially_stabilized.end());
    if (regs != trivially_stabilized) bad.push_back("regular subgroups of the cyclic holomorph do not reappear");
    return join_failures(bad);
  });

  list.add("cyclic-type", [&] {
    std::vector<std::string> bad;
    for (const auto& e : s.cyclic_report().entries)
      if (e.count.a != e.expected_a)
        bad.push_back("class " + std::to_string(e.class_id) + " has a=" + std::to_string(e.count.a) + ", expected " +
                      std::to_string(e.expected_a));
    return join_failures(bad);
  });

  return std::move(list.table);
}

Table render_command(Session& s, std::string_view command, std::string_view additive) {
  std::optional<Variant2p2> filter;
  if (!additive.empty()) {
    filter = parse_variant(additive, s.p());
    if (!filter) throw Error(ErrorKind::InvalidArgument, "unknown additive group '" + std::string(additive) + "'");
  }
  if (command == "groups") return groups_table(s);
  if (command == "hgs-table") return hgs_table(s);
  if (command == "transitive-table") return transitive_table(s);
  if (command == "brace-summary") return brace_summary_table(s);
  if (command == "braces") return braces_table(s, filter);
  if (command == "cyclic-type") return cyclic_type_table(s);
  if (command == "verify") return verify_table(s);
  throw Error(ErrorKind::InvalidArgument, "unknown command '" + std::string(command) + "'");
}

}  // namespace holobrace
