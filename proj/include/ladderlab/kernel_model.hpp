/*
 *   Copyright 2026 The ladderlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/**
 * @file
 *
 * Finite models of the kernel lattice: a user-supplied carrier lattice with
 * its K-least elements, lower-operator tables and K-lower map, extended by
 * three special elements T*, L*, R* that sit below every K-least element.
 *
 * The operator tables are data. Nothing here derives them from semigroup
 * presentations; validate() only checks their formal axioms.
 */

#ifndef LADDERLAB_KERNEL_MODEL_HPP
#define LADDERLAB_KERNEL_MODEL_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "theta.hpp"

namespace ladderlab {

  /** Structural error in a model description (unknown or duplicate names). */
  class ModelError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  enum class Special : std::uint8_t { T, L, R };

  /**
   * An element of the extended lattice: either one of the specials or a
   * carrier element referenced by index. Only meaningful together with the
   * model that owns the carrier.
   */
  class Element {
   public:
    constexpr Element() noexcept = default;

    static constexpr Element special(Special s) noexcept {
      return Element(-1 - static_cast<std::int32_t>(s));
    }

    static constexpr Element carrier(std::size_t i) noexcept {
      return Element(static_cast<std::int32_t>(i));
    }

    static constexpr Element t_star() noexcept {
      return special(Special::T);
    }
    static constexpr Element l_star() noexcept {
      return special(Special::L);
    }
    static constexpr Element r_star() noexcept {
      return special(Special::R);
    }

    constexpr bool is_special() const noexcept {
      return code_ < 0;
    }

    constexpr bool is_carrier() const noexcept {
      return code_ >= 0;
    }

    constexpr Special special_kind() const noexcept {
      return static_cast<Special>(-1 - code_);
    }

    constexpr std::size_t index() const noexcept {
      return static_cast<std::size_t>(code_);
    }

    constexpr std::int32_t code() const noexcept {
      return code_;
    }

    friend constexpr auto operator<=>(Element const&, Element const&) noexcept
        = default;

   private:
    constexpr explicit Element(std::int32_t c) noexcept : code_(c) {}
    std::int32_t code_ = -1;
  };

  /** The named varieties that receive special treatment under K*. */
  enum class Role : std::uint8_t { T, S, LZ, RZ, LNB, RNB };

  inline constexpr std::array<Role, 6> all_roles
      = {Role::T, Role::S, Role::LZ, Role::RZ, Role::LNB, Role::RNB};

  constexpr std::string_view role_name(Role r) noexcept {
    switch (r) {
      case Role::T:
        return "T";
      case Role::S:
        return "S";
      case Role::LZ:
        return "LZ";
      case Role::RZ:
        return "RZ";
      case Role::LNB:
        return "LNB";
      case Role::RNB:
        return "RNB";
    }
    return "?";
  }

  inline std::optional<Role> parse_role(std::string_view s) noexcept {
    for (Role r : all_roles) {
      if (role_name(r) == s) {
        return r;
      }
    }
    return std::nullopt;
  }

  /** Carrier symbol names: non-empty, letters, digits, '_' and '.'. */
  inline bool valid_symbol_name(std::string_view s) noexcept {
    if (s.empty()) {
      return false;
    }
    return std::all_of(s.begin(), s.end(), [](char c) {
      return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z')
             || (c >= '0' && c <= '9') || c == '_' || c == '.';
    });
  }

  /** Name-based description of a model, as read from a model file. */
  struct ModelSpec {
    using Pair = std::pair<std::string, std::string>;

    std::string                name;
    std::vector<std::string>   elements;
    std::vector<Pair>          covers;  // (a, b) means a < b
    std::vector<std::string>   k0;
    std::vector<std::pair<Role, std::string>> designated;
    std::vector<Pair>          low_l;
    std::vector<Pair>          low_r;
    std::vector<Pair>          kmap;
    // Family classification; absent when the model carries no tagging.
    std::optional<std::vector<std::string>> group_part;
    std::optional<std::vector<std::string>> cs_part;
    // Image set accepted by the Q-embedding; defaults to the tagged parts.
    std::optional<std::vector<std::string>> admissible;

    friend bool operator==(ModelSpec const&, ModelSpec const&) = default;
  };

  /** One failed axiom: a short stable tag plus a message naming witnesses. */
  struct ModelViolation {
    std::string axiom;
    std::string message;
  };

  class KernelModel {
   public:
    static constexpr std::size_t undefined = static_cast<std::size_t>(-1);

    explicit KernelModel(ModelSpec spec) : spec_(std::move(spec)) {
      build();
    }

    ModelSpec const& spec() const noexcept {
      return spec_;
    }

    std::string const& name() const noexcept {
      return spec_.name;
    }

    std::size_t size() const noexcept {
      return names_.size();
    }

    std::string const& symbol(std::size_t i) const {
      return names_.at(i);
    }

    std::optional<std::size_t> find(std::string_view name) const {
      auto it = index_.find(std::string(name));
      if (it == index_.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    std::size_t require(std::string_view name) const {
      auto i = find(name);
      if (!i) {
        throw ModelError("unknown element \"" + std::string(name)
                         + "\" in model " + spec_.name);
      }
      return *i;
    }

    ////////////////////////////////////////////////////////////////////////
    // Carrier order
    ////////////////////////////////////////////////////////////////////////

    bool leq(std::size_t a, std::size_t b) const {
      return leq_[a * size() + b];
    }

    bool is_partial_order() const noexcept {
      return antisymmetric_;
    }

    bool is_lattice() const noexcept {
      return lattice_;
    }

    std::size_t join(std::size_t a, std::size_t b) const {
      require_lattice();
      return join_[a * size() + b];
    }

    std::size_t meet(std::size_t a, std::size_t b) const {
      require_lattice();
      return meet_[a * size() + b];
    }

    std::optional<std::size_t> bottom() const noexcept {
      return bottom_;
    }

    std::optional<std::size_t> top() const noexcept {
      return top_;
    }

    /** Length (in covering steps) of the longest chain in the carrier. */
    std::size_t height() const noexcept {
      return height_;
    }

    /** Carrier indices in a fixed linear extension, bottom first. */
    std::vector<std::size_t> const& topological_order() const noexcept {
      return topo_;
    }

    ////////////////////////////////////////////////////////////////////////
    // Designated data
    ////////////////////////////////////////////////////////////////////////

    bool in_k0(std::size_t i) const {
      return k0_mask_.at(i);
    }

    std::vector<std::size_t> const& k0() const noexcept {
      return k0_;
    }

    std::optional<std::size_t> role(Role r) const noexcept {
      return roles_[static_cast<std::size_t>(r)];
    }

    std::optional<Role> role_of(std::size_t i) const noexcept {
      for (Role r : all_roles) {
        if (roles_[static_cast<std::size_t>(r)] == i) {
          return r;
        }
      }
      return std::nullopt;
    }

    /** Single-letter lower operator; `undefined` if the table has a gap. */
    std::size_t lower(Letter x, std::size_t i) const {
      return x == Letter::L ? low_l_.at(i) : low_r_.at(i);
    }

    std::size_t kmap(std::size_t i) const {
      return kmap_.at(i);
    }

    bool has_part_tags() const noexcept {
      return spec_.group_part.has_value() || spec_.cs_part.has_value();
    }

    bool in_group_part(std::size_t i) const {
      return group_mask_.at(i);
    }

    bool in_cs_part(std::size_t i) const {
      return cs_mask_.at(i);
    }

    bool admissible(std::size_t i) const {
      return admissible_mask_.at(i);
    }

    ////////////////////////////////////////////////////////////////////////
    // K* and the lower operators with K* applied
    ////////////////////////////////////////////////////////////////////////

    /** T* for T and S, L* for LZ and LNB, R* for RZ and RNB, kmap otherwise. */
    Element kstar(std::size_t i) const {
      if (auto r = role_of(i)) {
        switch (*r) {
          case Role::T:
          case Role::S:
            return Element::t_star();
          case Role::LZ:
          case Role::LNB:
            return Element::l_star();
          case Role::RZ:
          case Role::RNB:
            return Element::r_star();
        }
      }
      std::size_t const k = kmap_.at(i);
      if (k == undefined) {
        throw ModelError("kmap undefined at " + symbol(i));
      }
      return Element::carrier(k);
    }

    /** Applies the lower operators for the letters of `tau` left to right
     *  (without K*). */
    std::size_t lower_word(std::size_t v, Word const& tau) const {
      for (std::uint32_t p = 0; p < tau.length(); ++p) {
        std::size_t const next = lower(tau.at(p), v);
        if (next == undefined) {
          throw ModelError("lower operator undefined at " + symbol(v));
        }
        v = next;
      }
      return v;
    }

    /** kstar of the iterated lower operator. */
    Element lower_star(std::size_t v, Word const& tau) const {
      return kstar(lower_word(v, tau));
    }

    ////////////////////////////////////////////////////////////////////////
    // The extended lattice: K-least elements plus T*, L*, R*
    ////////////////////////////////////////////////////////////////////////

    /** Membership in the extended lattice (specials and k0). */
    bool in_extended(Element e) const {
      return e.is_special() || (e.index() < size() && in_k0(e.index()));
    }

    bool ext_leq(Element a, Element b) const {
      if (a.is_special()) {
        if (a.special_kind() == Special::T) {
          return true;
        }
        return b.is_carrier() || a == b;
      }
      return b.is_carrier() && leq(a.index(), b.index());
    }

    Element ext_join(Element a, Element b) const {
      if (a.is_carrier() && b.is_carrier()) {
        return Element::carrier(join(a.index(), b.index()));
      }
      if (a.is_carrier()) {
        return a;
      }
      if (b.is_carrier()) {
        return b;
      }
      if (a == Element::t_star()) {
        return b;
      }
      if (b == Element::t_star() || a == b) {
        return a;
      }
      // L* v R*: the least K-least element.
      if (!bottom_) {
        throw ModelError("join of L* and R* needs a carrier bottom");
      }
      return Element::carrier(kmap(*bottom_));
    }

    /** Carrier pairs meet as kmap of the carrier meet, the greatest K-least
     *  element below both. */
    Element ext_meet(Element a, Element b) const {
      if (a.is_carrier() && b.is_carrier()) {
        return Element::carrier(kmap(meet(a.index(), b.index())));
      }
      if (a.is_carrier()) {
        return b;
      }
      if (b.is_carrier()) {
        return a;
      }
      if (a == b) {
        return a;
      }
      return Element::t_star();
    }

    /** Elements of the extended lattice: k0 in topological order, then the
     *  specials T*, L*, R*. */
    std::vector<Element> extended_elements() const {
      std::vector<Element> out;
      for (std::size_t i : topo_) {
        if (in_k0(i)) {
          out.push_back(Element::carrier(i));
        }
      }
      out.push_back(Element::t_star());
      out.push_back(Element::l_star());
      out.push_back(Element::r_star());
      return out;
    }

    std::string to_string(Element e) const {
      if (e.is_special()) {
        switch (e.special_kind()) {
          case Special::T:
            return "T*";
          case Special::L:
            return "L*";
          case Special::R:
            return "R*";
        }
      }
      return symbol(e.index());
    }

    Element parse_element(std::string_view text) const {
      if (text == "T*") {
        return Element::t_star();
      }
      if (text == "L*") {
        return Element::l_star();
      }
      if (text == "R*") {
        return Element::r_star();
      }
      auto i = find(text);
      if (!i) {
        throw ParseError("unknown element \"" + std::string(text)
                         + "\" for model " + spec_.name);
      }
      return Element::carrier(*i);
    }

    ////////////////////////////////////////////////////////////////////////
    // Validation
    ////////////////////////////////////////////////////////////////////////

    /** Every violated axiom with witnesses; empty iff the model is valid. */
    std::vector<ModelViolation> const& violations() const noexcept {
      return violations_;
    }

    bool valid() const noexcept {
      return violations_.empty();
    }

   private:
    void require_lattice() const {
      if (!lattice_) {
        throw ModelError("carrier of model " + spec_.name
                         + " is not a lattice");
      }
    }

    std::vector<bool> mask_of(std::vector<std::string> const& names,
                              char const* what) const {
      std::vector<bool> mask(size(), false);
      for (auto const& n : names) {
        mask[lookup(n, what)] = true;
      }
      return mask;
    }

    std::size_t lookup(std::string const& n, char const* what) const {
      auto it = index_.find(n);
      if (it == index_.end()) {
        throw ModelError(std::string("unknown element \"") + n + "\" in "
                         + what);
      }
      return it->second;
    }

    std::vector<std::size_t> table_of(std::vector<ModelSpec::Pair> const& rows,
                                      char const* what) const {
      std::vector<std::size_t> table(size(), undefined);
      for (auto const& [from, to] : rows) {
        std::size_t const a = lookup(from, what);
        std::size_t const b = lookup(to, what);
        if (table[a] != undefined && table[a] != b) {
          throw ModelError(std::string("conflicting entries for ") + from
                           + " in " + what);
        }
        table[a] = b;
      }
      return table;
    }

    void build();
    void compute_order();
    void compute_lattice();
    void validate();
    void check_operator(std::vector<std::size_t> const& f, char const* name,
                        bool require_k0_range);
    void add(std::string axiom, std::string message) {
      violations_.push_back({std::move(axiom), std::move(message)});
    }

    ModelSpec                                   spec_;
    std::vector<std::string>                    names_;
    std::map<std::string, std::size_t>          index_;
    std::vector<bool>                           leq_;
    bool                                        antisymmetric_ = true;
    bool                                        lattice_       = false;
    std::vector<std::size_t>                    join_;
    std::vector<std::size_t>                    meet_;
    std::optional<std::size_t>                  bottom_;
    std::optional<std::size_t>                  top_;
    std::size_t                                 height_ = 0;
    std::vector<std::size_t>                    topo_;
    std::vector<bool>                           k0_mask_;
    std::vector<std::size_t>                    k0_;
    std::array<std::optional<std::size_t>, 6>   roles_{};
    std::vector<std::size_t>                    low_l_;
    std::vector<std::size_t>                    low_r_;
    std::vector<std::size_t>                    kmap_;
    std::vector<bool>                           group_mask_;
    std::vector<bool>                           cs_mask_;
    std::vector<bool>                           admissible_mask_;
    std::vector<ModelViolation>                 violations_;
  };

  inline void KernelModel::build() {
    for (auto const& n : spec_.elements) {
      if (!valid_symbol_name(n)) {
        throw ModelError("invalid element name \"" + n + "\"");
      }
      if (!index_.emplace(n, names_.size()).second) {
        throw ModelError("duplicate element \"" + n + "\"");
      }
      names_.push_back(n);
    }
    compute_order();
    compute_lattice();

    k0_mask_ = mask_of(spec_.k0, "[k0]");
    for (std::size_t i : topo_) {
      if (k0_mask_[i]) {
        k0_.push_back(i);
      }
    }
    for (auto const& [r, n] : spec_.designated) {
      auto& slot = roles_[static_cast<std::size_t>(r)];
      std::size_t const i = lookup(n, "[designated]");
      if (slot && *slot != i) {
        throw ModelError("role " + std::string(role_name(r))
                         + " designated twice");
      }
      slot = i;
    }
    low_l_ = table_of(spec_.low_l, "[lowL]");
    low_r_ = table_of(spec_.low_r, "[lowR]");
    kmap_  = table_of(spec_.kmap, "[kmap]");
    for (std::size_t i = 0; i < size(); ++i) {
      if (kmap_[i] == undefined && k0_mask_[i]) {
        kmap_[i] = i;
      }
    }
    std::vector<bool> none(size(), false);
    group_mask_ = spec_.group_part ? mask_of(*spec_.group_part, "[group]")
                                   : none;
    cs_mask_    = spec_.cs_part ? mask_of(*spec_.cs_part, "[cs]") : none;
    if (spec_.admissible) {
      admissible_mask_ = mask_of(*spec_.admissible, "[admissible]");
    } else {
      admissible_mask_.assign(size(), false);
      for (std::size_t i = 0; i < size(); ++i) {
        admissible_mask_[i] = group_mask_[i] || cs_mask_[i];
      }
    }
    validate();
  }

  inline void KernelModel::compute_order() {
    std::size_t const n = size();
    leq_.assign(n * n, false);
    for (std::size_t i = 0; i < n; ++i) {
      leq_[i * n + i] = true;
    }
    for (auto const& [a, b] : spec_.covers) {
      leq_[lookup(a, "[order]") * n + lookup(b, "[order]")] = true;
    }
    for (std::size_t k = 0; k < n; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (!leq_[i * n + k]) {
          continue;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (leq_[k * n + j]) {
            leq_[i * n + j] = true;
          }
        }
      }
    }
    for (std::size_t i = 0; i < n && antisymmetric_; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (leq_[i * n + j] && leq_[j * n + i]) {
          antisymmetric_ = false;
          break;
        }
      }
    }
    // Rank = longest chain from a minimal element; gives a linear extension
    // and the height.
    std::vector<std::size_t> rank(n, 0);
    if (antisymmetric_) {
      std::vector<std::size_t> order(n);
      for (std::size_t i = 0; i < n; ++i) {
        order[i] = i;
      }
      // Sorting by number of elements below is a linear extension.
      std::vector<std::size_t> below(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          below[i] += leq_[j * n + i] ? 1 : 0;
        }
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) {
                         return below[a] < below[b];
                       });
      for (std::size_t i : order) {
        for (std::size_t j : order) {
          if (j != i && leq_[j * n + i]) {
            rank[i] = std::max(rank[i], rank[j] + 1);
          }
        }
        height_ = std::max(height_, rank[i]);
      }
      topo_ = order;
      std::stable_sort(topo_.begin(), topo_.end(),
                       [&](std::size_t a, std::size_t b) {
                         return rank[a] < rank[b];
                       });
    } else {
      for (std::size_t i = 0; i < n; ++i) {
        topo_.push_back(i);
      }
    }
  }

  inline void KernelModel::compute_lattice() {
    std::size_t const n = size();
    for (std::size_t i = 0; i < n && antisymmetric_; ++i) {
      bool is_bottom = true;
      bool is_top    = true;
      for (std::size_t j = 0; j < n; ++j) {
        is_bottom = is_bottom && leq(i, j);
        is_top    = is_top && leq(j, i);
      }
      if (is_bottom) {
        bottom_ = i;
      }
      if (is_top) {
        top_ = i;
      }
    }
    if (!antisymmetric_ || n == 0) {
      return;
    }
    join_.assign(n * n, undefined);
    meet_.assign(n * n, undefined);
    lattice_ = true;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        std::size_t lub = undefined;
        std::size_t glb = undefined;
        for (std::size_t c = 0; c < n; ++c) {
          if (leq(a, c) && leq(b, c) && (lub == undefined || leq(c, lub))) {
            lub = c;
          }
          if (leq(c, a) && leq(c, b) && (glb == undefined || leq(glb, c))) {
            glb = c;
          }
        }
        // A candidate found greedily is only the join if it lies below every
        // other upper bound.
        for (std::size_t c = 0; c < n && lub != undefined; ++c) {
          if (leq(a, c) && leq(b, c) && !leq(lub, c)) {
            lub = undefined;
          }
        }
        for (std::size_t c = 0; c < n && glb != undefined; ++c) {
          if (leq(c, a) && leq(c, b) && !leq(c, glb)) {
            glb = undefined;
          }
        }
        join_[a * n + b] = lub;
        meet_[a * n + b] = glb;
        if (lub == undefined || glb == undefined) {
          lattice_ = false;
        }
      }
    }
  }

  inline void KernelModel::check_operator(std::vector<std::size_t> const& f,
                                          char const* name,
                                          bool require_k0_range) {
    std::string const tag(name);
    std::size_t const n = size();
    bool total = true;
    for (std::size_t a = 0; a < n; ++a) {
      if (f[a] == undefined) {
        add(tag + "-total", tag + " undefined at " + names_[a]);
        total = false;
      }
    }
    if (!total) {
      return;
    }
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        if (a != b && leq(a, b) && !leq(f[a], f[b])) {
          add(tag + "-monotone", tag + " not order-preserving at (" + names_[a]
                                     + "," + names_[b] + ")");
        }
      }
    }
    for (std::size_t a = 0; a < n; ++a) {
      if (!leq(f[a], a)) {
        add(tag + "-decreasing",
            tag + " not decreasing at " + names_[a] + ": " + names_[f[a]]
                + " is not below it");
      }
      if (f[f[a]] != f[a]) {
        add(tag + "-idempotent", tag + " not idempotent at " + names_[a]);
      }
      if (require_k0_range && !k0_mask_[f[a]]) {
        add(tag + "-range", tag + " maps " + names_[a] + " off k0 to "
                                + names_[f[a]]);
      }
    }
    if (require_k0_range) {
      for (std::size_t a : k0_) {
        if (f[a] != a) {
          add(tag + "-k0-identity",
              tag + " moves k0 element " + names_[a] + " to " + names_[f[a]]);
        }
      }
    }
  }

  inline void KernelModel::validate() {
    std::size_t const n = size();
    if (n == 0) {
      add("carrier-empty", "carrier has no elements");
      return;
    }
    if (!antisymmetric_) {
      add("order-antisymmetric", "order relation has a cycle");
      return;
    }
    if (!bottom_) {
      add("bottom", "carrier order has no bottom element");
    }
    for (std::size_t a = 0; a < n && !lattice_; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (join_[a * n + b] == undefined) {
          add("lattice", "no join for (" + names_[a] + "," + names_[b] + ")");
        }
        if (meet_[a * n + b] == undefined) {
          add("lattice", "no meet for (" + names_[a] + "," + names_[b] + ")");
        }
      }
    }
    if (auto t = roles_[static_cast<std::size_t>(Role::T)];
        t && (!bottom_ || *t != *bottom_)) {
      add("T-bottom", "designated T (" + names_[*t]
                          + ") is not the carrier bottom");
    }
    if (k0_.empty()) {
      add("k0-empty", "k0 has no elements");
    }
    check_operator(low_l_, "lowL", false);
    check_operator(low_r_, "lowR", false);
    check_operator(kmap_, "kmap", true);

    if (auto t = roles_[static_cast<std::size_t>(Role::T)]) {
      if (low_l_[*t] != *t) {
        add("fixes-T", "lowL does not fix designated T");
      }
      if (low_r_[*t] != *t) {
        add("fixes-T", "lowR does not fix designated T");
      }
      if (kmap_[*t] != *t) {
        add("fixes-T", "kmap does not fix designated T");
      }
    }
    for (std::size_t r = 0; r < roles_.size(); ++r) {
      for (std::size_t s = r + 1; s < roles_.size(); ++s) {
        if (roles_[r] && roles_[r] == roles_[s]) {
          add("roles-distinct",
              "roles " + std::string(role_name(all_roles[r])) + " and "
                  + std::string(role_name(all_roles[s])) + " share element "
                  + names_[*roles_[r]]);
        }
      }
      if (r != static_cast<std::size_t>(Role::T) && roles_[r]
          && k0_mask_[*roles_[r]]) {
        add("role-in-k0", "designated " + std::string(role_name(all_roles[r]))
                              + " (" + names_[*roles_[r]] + ") lies in k0");
      }
    }
    if (lattice_) {
      for (std::size_t a : k0_) {
        for (std::size_t b : k0_) {
          if (a < b && !k0_mask_[join_[a * n + b]]) {
            add("k0-join-closed", "join of (" + names_[a] + "," + names_[b]
                                      + ") leaves k0");
          }
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if ((group_mask_[i] || cs_mask_[i]) && !k0_mask_[i]) {
        add("parts-in-k0", "tagged element " + names_[i] + " is not in k0");
      }
      if (group_mask_[i] && cs_mask_[i]) {
        add("parts-disjoint", names_[i] + " tagged both group and cs");
      }
      if (admissible_mask_[i] && !k0_mask_[i]) {
        add("admissible-in-k0", "admissible element " + names_[i]
                                    + " is not in k0");
      }
    }
  }

}  // namespace ladderlab

#endif  // LADDERLAB_KERNEL_MODEL_HPP
