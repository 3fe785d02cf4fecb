#include "normcheck/ontology.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "normcheck/error.hpp"

using namespace normcheck;

namespace {

std::filesystem::path write_temp(const std::string& name,
                                 const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << content;
  return path;
}

OntologyModel tiny_model() {
  OntologyModel m;
  m.ontology_id = "tiny";
  m.iri_base = "http://example.org/tiny#";
  m.classes = {
      {"http://example.org/tiny#Resource", "resource", {"asset"}, {}, {}},
      {"http://example.org/tiny#FlowControl", "flow control", {}, {}, {}},
      {"http://example.org/tiny#IS", "IS", {}, {}, {}},
  };
  m.subclass_edges = {
      {"http://example.org/tiny#FlowControl", "http://example.org/tiny#Resource"}};
  return m;
}

}  // namespace

TEST_CASE("native loader round trip") {
  const std::string text = R"({
    "ontology_id": "demo",
    "iri_base": "http://example.org/demo#",
    "domain_category": "DomainSpecific",
    "classes": [
      {"iri": "http://example.org/demo#A", "primary_label": "alpha thing",
       "alt_labels": ["first thing"], "definition": "the first one"},
      {"iri": "http://example.org/demo#B", "primary_label": "beta thing"}
    ],
    "subclass_edges": [["http://example.org/demo#A", "http://example.org/demo#B"]],
    "object_properties": ["http://example.org/demo#relates"],
    "datatype_properties": []
  })";
  auto path = write_temp("normcheck_demo_onto.json", text);
  OntologyLoad load = load_ontology_native(path.string());
  CHECK(load.model.ontology_id == "demo");
  CHECK(load.model.classes.size() == 2);
  CHECK(load.model.subclass_edges.size() == 1);
  CHECK(load.model.object_properties.size() == 1);
  CHECK(load.warnings.empty());
  std::filesystem::remove(path);
}

TEST_CASE("empty ontology is valid") {
  auto path = write_temp("normcheck_empty_onto.json", R"({
    "ontology_id": "empty", "iri_base": "http://e/#",
    "domain_category": "GenericStandards",
    "classes": [], "subclass_edges": [],
    "object_properties": [], "datatype_properties": []
  })");
  OntologyLoad load = load_ontology_native(path.string());
  OntologyStats stats = ontology_stats(load.model);
  CHECK(stats.classes == 0);
  CHECK(stats.object_properties == 0);
  CHECK(stats.datatype_properties == 0);
  CHECK(stats.subclass_edges == 0);
  CHECK(stats.roots == 0);
  std::filesystem::remove(path);
}

TEST_CASE("dangling edge is an error") {
  auto path = write_temp("normcheck_dangling.json", R"({
    "ontology_id": "bad", "iri_base": "http://e/#",
    "domain_category": "DomainSpecific",
    "classes": [{"iri": "http://e/#A", "primary_label": "a"}],
    "subclass_edges": [["http://e/#A", "http://e/#B"]],
    "object_properties": [], "datatype_properties": []
  })");
  try {
    load_ontology_native(path.string());
    FAIL("expected DanglingEdge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DanglingEdge);
  }
  std::filesystem::remove(path);
}

TEST_CASE("duplicate IRI is an error") {
  auto path = write_temp("normcheck_dupiri.json", R"({
    "ontology_id": "bad", "iri_base": "http://e/#",
    "domain_category": "DomainSpecific",
    "classes": [{"iri": "http://e/#A", "primary_label": "a"},
                 {"iri": "http://e/#A", "primary_label": "a again"}],
    "subclass_edges": [], "object_properties": [], "datatype_properties": []
  })");
  try {
    load_ontology_native(path.string());
    FAIL("expected DuplicateIri");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateIri);
  }
  std::filesystem::remove(path);
}

TEST_CASE("multiple inheritance loads with a note") {
  auto path = write_temp("normcheck_multiparent.json", R"({
    "ontology_id": "mp", "iri_base": "http://e/#",
    "domain_category": "DomainSpecific",
    "classes": [{"iri": "http://e/#A", "primary_label": "a"},
                 {"iri": "http://e/#B", "primary_label": "b"},
                 {"iri": "http://e/#C", "primary_label": "c"}],
    "subclass_edges": [["http://e/#A", "http://e/#B"], ["http://e/#A", "http://e/#C"]],
    "object_properties": [], "datatype_properties": []
  })");
  OntologyLoad load = load_ontology_native(path.string());
  REQUIRE(load.warnings.size() == 1);
  CHECK(load.warnings[0].find("MultiParent") == 0);
  std::filesystem::remove(path);
}

TEST_CASE("subclass cycles warn and break deterministically") {
  OntologyModel m;
  m.ontology_id = "cyc";
  m.classes = {{"http://e/#A", "a", {}, {}, {}},
               {"http://e/#B", "b", {}, {}, {}}};
  m.subclass_edges = {{"http://e/#A", "http://e/#B"},
                      {"http://e/#B", "http://e/#A"}};
  auto edges = acyclic_edges(m);
  REQUIRE(edges.size() == 1);
  // The lexicographically smallest (child, parent) pair is dropped.
  CHECK(edges[0] == SubclassEdge{"http://e/#B", "http://e/#A"});
}

TEST_CASE("roots of a chain") {
  OntologyModel m;
  m.ontology_id = "chain";
  m.classes = {{"A", "a", {}, {}, {}}, {"B", "b", {}, {}, {}},
               {"C", "c", {}, {}, {}}};
  m.subclass_edges = {{"A", "B"}, {"B", "C"}};
  OntologyStats stats = ontology_stats(m);
  CHECK(stats.roots == 1);
  CHECK(stats.subclass_edges == 2);
}

TEST_CASE("RDF/XML subset maps onto the native model") {
  const std::string rdf = R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xmlns:skos="http://www.w3.org/2004/02/skos/core#"
         xml:base="http://example.org/demo">
  <owl:Ontology rdf:about="http://example.org/demo"/>
  <owl:Class rdf:about="http://example.org/demo#Resource">
    <rdfs:label>resource</rdfs:label>
  </owl:Class>
  <owl:Class rdf:about="http://example.org/demo#Concept">
    <rdfs:label>manufacturing concept</rdfs:label>
  </owl:Class>
  <owl:Class rdf:about="http://example.org/demo#Machine">
    <rdfs:label>machine</rdfs:label>
    <skos:altLabel>machine tool</skos:altLabel>
    <rdfs:subClassOf rdf:resource="http://example.org/demo#Resource"/>
  </owl:Class>
  <owl:ObjectProperty rdf:about="http://example.org/demo#uses"/>
  <owl:DatatypeProperty rdf:about="http://example.org/demo#capacity"/>
</rdf:RDF>)";
  auto path = write_temp("normcheck_demo.rdf", rdf);
  OntologyLoad load = load_ontology_rdfxml_subset(path.string(), "demo");
  CHECK(load.model.classes.size() == 3);
  CHECK(load.model.subclass_edges.size() == 1);
  CHECK(load.model.object_properties.size() == 1);
  CHECK(load.model.datatype_properties.size() == 1);
  CHECK(load.model.iri_base == "http://example.org/demo");
  const ClassEntry* machine = load.model.find_class("http://example.org/demo#Machine");
  REQUIRE(machine != nullptr);
  CHECK(machine->primary_label == "machine");
  REQUIRE(machine->alt_labels.size() == 1);
  CHECK(machine->alt_labels[0] == "machine tool");
  std::filesystem::remove(path);
}

TEST_CASE("restriction blocks are skipped with a warning") {
  const std::string rdf = R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#">
  <owl:Class rdf:about="http://e/#A">
    <rdfs:label>alpha</rdfs:label>
    <rdfs:subClassOf>
      <owl:Restriction>
        <owl:onProperty rdf:resource="http://e/#p"/>
      </owl:Restriction>
    </rdfs:subClassOf>
  </owl:Class>
</rdf:RDF>)";
  auto path = write_temp("normcheck_restriction.rdf", rdf);
  OntologyLoad load = load_ontology_rdfxml_subset(path.string());
  CHECK(load.model.classes.size() == 1);
  CHECK(load.model.subclass_edges.empty());
  REQUIRE(load.warnings.size() == 1);
  std::filesystem::remove(path);
}

TEST_CASE("malformed XML is a parse error") {
  auto path = write_temp("normcheck_broken.rdf", "<rdf:RDF><unclosed>");
  CHECK_THROWS_AS(load_ontology_rdfxml_subset(path.string()), Error);
  std::filesystem::remove(path);
}

TEST_CASE("native and RDF/XML twins are structurally equal") {
  const std::string native = R"({
    "ontology_id": "twin", "iri_base": "http://example.org/twin",
    "domain_category": "ExternalTechnical",
    "classes": [
      {"iri": "http://example.org/twin#Sensor", "primary_label": "sensor",
       "alt_labels": ["sensor unit"], "definition": "device producing measurements"},
      {"iri": "http://example.org/twin#Device", "primary_label": "device"}
    ],
    "subclass_edges": [["http://example.org/twin#Sensor", "http://example.org/twin#Device"]],
    "object_properties": ["http://example.org/twin#measures"],
    "datatype_properties": ["http://example.org/twin#unit"]
  })";
  const std::string rdf = R"(<?xml version="1.0"?>
<rdf:RDF xmlns:rdf="http://www.w3.org/1999/02/22-rdf-syntax-ns#"
         xmlns:rdfs="http://www.w3.org/2000/01/rdf-schema#"
         xmlns:owl="http://www.w3.org/2002/07/owl#"
         xmlns:skos="http://www.w3.org/2004/02/skos/core#"
         xml:base="http://example.org/twin">
  <owl:Class rdf:about="http://example.org/twin#Sensor">
    <rdfs:label>sensor</rdfs:label>
    <skos:altLabel>sensor unit</skos:altLabel>
    <rdfs:comment>device producing measurements</rdfs:comment>
    <rdfs:subClassOf rdf:resource="http://example.org/twin#Device"/>
  </owl:Class>
  <owl:Class rdf:about="http://example.org/twin#Device">
    <rdfs:label>device</rdfs:label>
  </owl:Class>
  <owl:ObjectProperty rdf:about="http://example.org/twin#measures"/>
  <owl:DatatypeProperty rdf:about="http://example.org/twin#unit"/>
</rdf:RDF>)";
  auto jpath = write_temp("normcheck_twin.json", native);
  auto xpath = write_temp("normcheck_twin.rdf", rdf);
  OntologyLoad a = load_ontology_native(jpath.string());
  OntologyLoad b = load_ontology_rdfxml_subset(xpath.string(), "twin");
  CHECK(structurally_equal(a.model, b.model));
  CHECK(structurally_equal(b.model, a.model));
  std::filesystem::remove(jpath);
  std::filesystem::remove(xpath);
}

TEST_CASE("case policy threshold") {
  CHECK(case_policy_for("IS") == CasePolicy::AcronymExact);
  CHECK(case_policy_for("STEP") == CasePolicy::AcronymExact);
  CHECK(case_policy_for("P-LIB") == CasePolicy::AcronymExact);
  CHECK(case_policy_for("Flow Control") == CasePolicy::CaseInsensitive);
  CHECK(case_policy_for("EXPRESS") == CasePolicy::CaseInsensitive);  // 7 chars
  CHECK(case_policy_for("resource") == CasePolicy::CaseInsensitive);
}

TEST_CASE("label index lookups") {
  std::vector<OntologyModel> models = {tiny_model()};
  LabelIndex index = LabelIndex::build(models);

  SUBCASE("case-insensitive labels match any casing") {
    CHECK(index.lookup_phrase("flow control").size() == 1);
    CHECK(index.lookup_phrase("FLOW CONTROL").size() == 1);
    CHECK(index.lookup_phrase("Flow Control").size() == 1);
  }
  SUBCASE("acronyms match exactly") {
    CHECK(index.lookup_phrase("IS").size() == 1);
    CHECK(index.lookup_phrase("is").empty());
    CHECK(index.lookup_phrase("Is").empty());
  }
  SUBCASE("unindexed sequences return the empty list") {
    CHECK(index.lookup_phrase("no such label").empty());
    CHECK(index.lookup(LabelIndex::key_of({"zzz"})).empty());
  }
  SUBCASE("acronym labels are reported") {
    auto acronyms = index.acronym_labels();
    REQUIRE(acronyms.size() == 1);
    CHECK(acronyms[0] == "IS");
  }
}

TEST_CASE("two ontologies sharing a label list both IRIs under one key") {
  OntologyModel a = tiny_model();
  OntologyModel b;
  b.ontology_id = "other";
  b.iri_base = "http://example.org/other#";
  b.classes = {{"http://example.org/other#Resource", "resource", {}, {}, {}}};
  LabelIndex index = LabelIndex::build({a, b});
  auto hits = index.lookup_phrase("resource");
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].ontology_id != hits[1].ontology_id);
}

TEST_CASE("plural fold indexes a trailing-s variant") {
  OntologyModel m = tiny_model();
  m.fold_plural = true;
  LabelIndex index = LabelIndex::build({m});
  auto hits = index.lookup_phrase("resources");
  REQUIRE(hits.size() == 1);
  CHECK(hits[0].plural_variant);
  CHECK(hits[0].label == "resource");
  // Acronyms never fold.
  CHECK(index.lookup_phrase("ISs").empty());
}
