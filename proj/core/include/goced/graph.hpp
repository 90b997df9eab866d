/*
 * Copyright (C) 2026 The goced Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <map>
#include <set>
#include <vector>

#include "goced/model.hpp"

namespace goced {

struct GraphConfig {
  /// Minimum number of endurants a relator must mediate. The default of two
  /// matches ordinary reified relationships; lower it to one for anadyc
  /// relations whose arity varies per instance.
  int min_mediation = 2;
};

/// The in-memory instance model: elements keyed by id, typed link sets, and
/// derived indexes. Construction is single-writer; after the last insert the
/// graph is treated as immutable and all const member functions are safe to
/// call concurrently.
///
/// Every insert checks the element's own invariants and that all referenced
/// ids are already present, so referential integrity holds after each
/// successful call. Inserting an identical link twice is a no-op; inserting
/// any element under an existing id throws DuplicateId.
class GocedGraph {
 public:
  explicit GocedGraph(GraphConfig config = {}) : config_(config) {}

  EntityId insert(EndurantType type);
  EntityId insert(EventType type);
  EntityId insert(Endurant endurant);
  EntityId insert(Qvas qvas);
  EntityId insert(Event event);

  /// Link insertion is idempotent on identical records. ProperPartOf links
  /// that would close a part-whole cycle are rejected with
  /// InvariantViolation.
  void link(const E2OLink& l);
  void link(const E2ELink& l);
  void link(const QvasEventLink& l);

  bool contains(const EntityId& id) const { return id_kinds_.count(id) != 0; }

  const EndurantType* endurant_type(const EntityId& id) const;
  const EventType* event_type(const EntityId& id) const;
  const Endurant* endurant(const EntityId& id) const;
  const Qvas* qvas(const EntityId& id) const;
  const Event* event(const EntityId& id) const;

  /// Lookup that throws UnknownId instead of returning null.
  const Endurant& require_endurant(const EntityId& id) const;
  const Event& require_event(const EntityId& id) const;
  const Qvas& require_qvas(const EntityId& id) const;

  const std::map<EntityId, EndurantType>& endurant_types() const { return endurant_types_; }
  const std::map<EntityId, EventType>& event_types() const { return event_types_; }
  const std::map<EntityId, Endurant>& endurants() const { return endurants_; }
  const std::map<EntityId, Qvas>& qvass() const { return qvass_; }
  const std::map<EntityId, Event>& events() const { return events_; }

  const std::set<E2OLink>& e2o_links() const { return e2o_; }
  const std::set<E2ELink>& e2e_links() const { return e2e_; }
  const std::set<QvasEventLink>& qvas_links() const { return qvas_links_; }

  // Derived indexes. All return an empty set for ids without entries.
  const std::set<EntityId>& events_of(const EntityId& endurant) const;
  const std::set<EntityId>& qvas_of(const EntityId& quality) const;
  const std::set<EntityId>& qualities_of(const EntityId& host) const;
  const std::set<EntityId>& endurants_of_type(const EntityId& type) const;
  const std::set<EntityId>& events_of_type(const EntityId& type) const;

  /// Direct (or transitive) proper parts of an event, read off the source
  /// side of ProperPartOf links. Throws UnknownId.
  std::set<EntityId> parts_of(const EntityId& event, bool transitive) const;

  /// An event is atomic iff it has no proper parts. Throws UnknownId.
  bool is_atomic(const EntityId& event) const;

  /// The endurants mediated by a relator, sorted. Throws UnknownId or
  /// NotARelator.
  const std::vector<EntityId>& mediated_by(const EntityId& relator) const;

  const GraphConfig& config() const { return config_; }

  std::size_t element_count() const { return id_kinds_.size(); }

  /// Element-wise equality over all element maps and link sets; config and
  /// derived indexes do not participate.
  friend bool operator==(const GocedGraph& a, const GocedGraph& b) {
    return a.endurant_types_ == b.endurant_types_ &&
           a.event_types_ == b.event_types_ && a.endurants_ == b.endurants_ &&
           a.qvass_ == b.qvass_ && a.events_ == b.events_ && a.e2o_ == b.e2o_ &&
           a.e2e_ == b.e2e_ && a.qvas_links_ == b.qvas_links_;
  }

 private:
  enum class ElementKind { EndurantType, EventType, Endurant, Qvas, Event };

  void claim_id(const EntityId& id, ElementKind kind);
  const Endurant& referenced_endurant(const EntityId& id, const char* role) const;
  const Event& referenced_event(const EntityId& id, const char* role) const;

  GraphConfig config_;

  std::map<EntityId, EndurantType> endurant_types_;
  std::map<EntityId, EventType> event_types_;
  std::map<EntityId, Endurant> endurants_;
  std::map<EntityId, Qvas> qvass_;
  std::map<EntityId, Event> events_;

  std::set<E2OLink> e2o_;
  std::set<E2ELink> e2e_;
  std::set<QvasEventLink> qvas_links_;

  std::map<EntityId, ElementKind> id_kinds_;

  // Derived, rebuildable.
  std::map<EntityId, std::set<EntityId>> events_by_endurant_;
  std::map<EntityId, std::set<EntityId>> qvas_by_quality_;
  std::map<EntityId, std::set<EntityId>> qualities_by_host_;
  std::map<EntityId, std::set<EntityId>> endurants_by_type_;
  std::map<EntityId, std::set<EntityId>> events_by_type_;
  std::map<EntityId, std::set<EntityId>> parts_by_whole_;
};

}  // namespace goced
