// Generates the bundled synthetic fixtures: a six-part corpus shaped like a
// multi-part manufacturing-data standard, three annotation ontologies (native
// JSON plus RDF/XML twins), the standards registry and the reference rule
// phase. Output is fully deterministic.
//
// The corpus seeds exactly one finding of each kind:
//   - "flow control" defined identically in part1 and part42
//   - "operation" defined with wording drift in part1 and part43
//   - "basic semantic register" adapted from ISO/TS 16668
//   - acronym "IS" against the ordinary word "is"
//   - "resource view" whose definition leads with "resource representation:"
//   - one citation of the unregistered ISO 99999
//   - the term "part" labeled by both the domain and the technical ontology
//
// Everything else (filler prose, extra terms, extra classes) is constructed
// to stay out of every check's trigger set.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

void write_file(const fs::path& path, const std::string& content) {
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "cannot write " << path << "\n";
    std::exit(1);
  }
  out << content;
}

// ---------------------------------------------------------------------------
// Ontologies
// ---------------------------------------------------------------------------

struct FixtureClass {
  std::string local;  // IRI fragment
  std::string label;
  std::vector<std::string> alts;
  std::string definition;
  std::string source_ref;
  std::string parent;  // local name, "" for roots
};

struct FixtureOntology {
  std::string id;
  std::string iri_base;
  std::string category;
  std::vector<FixtureClass> classes;
  std::vector<std::pair<std::string, std::string>> extra_edges;  // multi-parent
  std::vector<std::string> object_properties;
  std::vector<std::string> datatype_properties;
};

std::string iri_of(const FixtureOntology& onto, const std::string& local) {
  return onto.iri_base + "#" + local;
}

json to_native_json(const FixtureOntology& onto) {
  json classes = json::array();
  for (const FixtureClass& c : onto.classes) {
    json entry{{"iri", iri_of(onto, c.local)}, {"primary_label", c.label}};
    if (!c.alts.empty()) entry["alt_labels"] = c.alts;
    if (!c.definition.empty()) entry["definition"] = c.definition;
    if (!c.source_ref.empty()) entry["source_ref"] = c.source_ref;
    classes.push_back(std::move(entry));
  }
  json edges = json::array();
  for (const FixtureClass& c : onto.classes) {
    if (!c.parent.empty()) {
      edges.push_back(json::array({iri_of(onto, c.local), iri_of(onto, c.parent)}));
    }
  }
  for (const auto& [child, parent] : onto.extra_edges) {
    edges.push_back(json::array({iri_of(onto, child), iri_of(onto, parent)}));
  }
  json props_obj = json::array();
  for (const std::string& p : onto.object_properties) {
    props_obj.push_back(onto.iri_base + "#" + p);
  }
  json props_data = json::array();
  for (const std::string& p : onto.datatype_properties) {
    props_data.push_back(onto.iri_base + "#" + p);
  }
  return json{{"ontology_id", onto.id},
              {"iri_base", onto.iri_base},
              {"domain_category", onto.category},
              {"classes", std::move(classes)},
              {"subclass_edges", std::move(edges)},
              {"object_properties", std::move(props_obj)},
              {"datatype_properties", std::move(props_data)}};
}

std::string xml_escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::string to_rdfxml(const FixtureOntology& onto) {
  std::ostringstream xml;
  xml << "<?xml version=\"1.0\"?>\n";
  xml << "<rdf:RDF xmlns:rdf=\"http://www.w3.org/1999/02/22-rdf-syntax-ns#\"\n";
  xml << "         xmlns:rdfs=\"http://www.w3.org/2000/01/rdf-schema#\"\n";
  xml << "         xmlns:owl=\"http://www.w3.org/2002/07/owl#\"\n";
  xml << "         xmlns:skos=\"http://www.w3.org/2004/02/skos/core#\"\n";
  xml << "         xml:base=\"" << onto.iri_base << "\">\n";
  xml << "  <owl:Ontology rdf:about=\"" << onto.iri_base << "\"/>\n";
  for (const FixtureClass& c : onto.classes) {
    xml << "  <owl:Class rdf:about=\"" << iri_of(onto, c.local) << "\">\n";
    xml << "    <rdfs:label>" << xml_escape(c.label) << "</rdfs:label>\n";
    for (const std::string& alt : c.alts) {
      xml << "    <skos:altLabel>" << xml_escape(alt) << "</skos:altLabel>\n";
    }
    if (!c.definition.empty()) {
      xml << "    <rdfs:comment>" << xml_escape(c.definition)
          << "</rdfs:comment>\n";
    }
    if (!c.parent.empty()) {
      xml << "    <rdfs:subClassOf rdf:resource=\"" << iri_of(onto, c.parent)
          << "\"/>\n";
    }
    for (const auto& [child, parent] : onto.extra_edges) {
      if (child == c.local) {
        xml << "    <rdfs:subClassOf rdf:resource=\"" << iri_of(onto, parent)
            << "\"/>\n";
      }
    }
    xml << "  </owl:Class>\n";
  }
  for (const std::string& p : onto.object_properties) {
    xml << "  <owl:ObjectProperty rdf:about=\"" << onto.iri_base << "#" << p
        << "\"/>\n";
  }
  for (const std::string& p : onto.datatype_properties) {
    xml << "  <owl:DatatypeProperty rdf:about=\"" << onto.iri_base << "#" << p
        << "\"/>\n";
  }
  xml << "</rdf:RDF>\n";
  return xml.str();
}

std::string camel(const std::string& label) {
  std::string out;
  bool up = true;
  for (char c : label) {
    if (c == ' ' || c == '-') {
      up = true;
      continue;
    }
    out.push_back(up ? static_cast<char>(std::toupper(static_cast<unsigned char>(c)))
                     : c);
    up = false;
  }
  return out;
}

FixtureClass cls(const std::string& label, const std::string& parent = "",
                 const std::string& definition = "",
                 std::vector<std::string> alts = {},
                 const std::string& source_ref = "") {
  FixtureClass c;
  c.local = camel(label);
  c.label = label;
  c.alts = std::move(alts);
  c.definition = definition;
  c.source_ref = source_ref;
  c.parent = parent.empty() ? "" : camel(parent);
  return c;
}

// Standards-and-standardization vocabulary; padded to exactly 125 classes,
// 44 object properties and 4 datatype properties.
FixtureOntology build_isto() {
  FixtureOntology onto;
  onto.id = "isto_fixture";
  onto.iri_base = "http://fixtures.example.org/isto";
  onto.category = "GenericStandards";

  auto& c = onto.classes;
  c.push_back(cls("normative document"));
  c.push_back(cls("standard", "normative document",
                  "document that provides rules or guidelines for common use"));
  c.push_back(cls("international standard", "standard", "", {"IS"}));
  c.push_back(cls("technical specification", "standard"));
  c.push_back(cls("technical report", "standard"));
  c.push_back(cls("publicly available specification", "standard", "", {"PAS"}));
  c.push_back(cls("guide", "normative document"));
  c.push_back(cls("amendment", "normative document"));
  c.push_back(cls("corrigendum", "normative document"));
  c.push_back(cls("international workshop agreement", "normative document"));
  c.push_back(cls("standards body"));
  c.push_back(cls("standards developing organization", "standards body", "", {"SDO"}));
  c.push_back(cls("national standards body", "standards body"));
  c.push_back(cls("technical committee", "standards body"));
  c.push_back(cls("subcommittee", "technical committee"));
  c.push_back(cls("working group", "technical committee"));
  c.push_back(cls("advisory group", "technical committee"));
  c.push_back(cls("secretariat", "standards body"));
  c.push_back(cls("chairperson"));
  c.push_back(cls("convenor"));
  c.push_back(cls("expert"));
  c.push_back(cls("member body"));
  c.push_back(cls("standardization"));
  c.push_back(cls("standardization process", "standardization"));
  c.push_back(cls("development track", "standardization process"));
  c.push_back(cls("proposal stage", "standardization process"));
  c.push_back(cls("committee stage", "standardization process"));
  c.push_back(cls("enquiry stage", "standardization process"));
  c.push_back(cls("approval stage", "standardization process"));
  c.push_back(cls("publication stage", "standardization process"));
  c.push_back(cls("systematic review", "standardization process"));
  c.push_back(cls("ballot"));
  c.push_back(cls("consensus"));
  c.push_back(cls("vote"));
  c.push_back(cls("work item"));
  c.push_back(cls("new work item proposal", "work item"));
  c.push_back(cls("committee draft", "work item"));
  c.push_back(cls("draft international standard", "work item"));
  c.push_back(cls("final draft", "work item"));
  c.push_back(cls("scope statement"));
  c.push_back(cls("normative reference"));
  c.push_back(cls("terms clause"));
  c.push_back(cls("annex clause"));
  c.push_back(cls("bibliography clause"));
  c.push_back(cls("foreword"));
  c.push_back(cls("introduction"));
  c.push_back(cls("edition"));
  c.push_back(cls("deliverable"));
  c.push_back(cls("directive"));
  c.push_back(cls("drafting rule", "directive"));
  // Pad with numbered drafting rules up to 125 classes.
  int serial = 1;
  while (c.size() < 125) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "drafting rule %02d", serial++);
    c.push_back(cls(buf, "drafting rule"));
  }

  const char* object_props[] = {
      "approves",    "publishes",  "develops",   "revises",    "supersedes",
      "references",  "amends",     "contains",   "belongs_to", "chairs",
      "convenes",    "funds",      "ballots",    "reviews",    "withdraws",
      "harmonizes",  "adopts",     "circulates", "drafts",     "comments_on",
      "votes_on",    "confirms",   "registers",  "maintains",  "liaises_with",
      "delegates",   "appoints",   "proposes",   "edits",      "translates"};
  for (const char* p : object_props) onto.object_properties.push_back(p);
  serial = 1;
  while (onto.object_properties.size() < 44) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "relates_%02d", serial++);
    onto.object_properties.push_back(buf);
  }
  onto.datatype_properties = {"edition_number", "publication_year",
                              "page_count", "stage_code"};
  return onto;
}

// Manufacturing-management vocabulary covering the six parts.
FixtureOntology build_iso15531() {
  FixtureOntology onto;
  onto.id = "iso15531_fixture";
  onto.iri_base = "http://fixtures.example.org/iso15531";
  onto.category = "DomainSpecific";

  auto& c = onto.classes;
  c.push_back(cls("manufacturing concept"));
  c.push_back(cls("resource", "manufacturing concept",
                  "basic element for the management of manufacturing resources"));
  c.push_back(cls("generic resource", "resource"));
  c.push_back(cls("specific resource", "resource"));
  c.push_back(cls("resource hierarchy", "manufacturing concept"));
  c.push_back(cls("resource status", "manufacturing concept"));
  c.push_back(cls("resource view", "manufacturing concept"));
  c.push_back(cls("resource administration", "manufacturing concept"));
  c.push_back(cls("resource representation", "manufacturing concept"));
  c.push_back(cls("resource configuration", "manufacturing concept"));
  c.push_back(cls("manufacturing management", "manufacturing concept"));
  c.push_back(cls("manufacturing process", "manufacturing concept"));
  c.push_back(cls("manufacturing flow", "manufacturing concept"));
  c.push_back(cls("flow control", "manufacturing flow",
                  "control exercised over the manufacturing flow"));
  c.push_back(cls("flow monitoring", "manufacturing flow"));
  c.push_back(cls("operation", "manufacturing process"));
  c.push_back(cls("production schedule", "manufacturing concept"));
  c.push_back(cls("production chain", "manufacturing concept"));
  c.push_back(cls("shop floor", "manufacturing concept"));
  c.push_back(cls("shop floor data", "shop floor"));
  c.push_back(cls("data acquisition", "shop floor"));
  c.push_back(cls("data acquisition system", "data acquisition"));
  c.push_back(cls("time concept"));
  c.push_back(cls("time domain", "time concept"));
  c.push_back(cls("time interval", "time concept"));
  c.push_back(cls("point in time", "time concept"));
  c.push_back(cls("time unit", "time concept"));
  c.push_back(cls("interval limit", "time concept"));
  c.push_back(cls("time stamping", "time concept"));
  c.push_back(cls("part", "manufacturing concept",
                  "separately published piece of a multipart standard"));
  c.push_back(cls("product", "manufacturing concept"));
  c.push_back(cls("component", "product"));
  c.push_back(cls("raw material", "product"));
  c.push_back(cls("material flow", "manufacturing flow"));
  c.push_back(cls("information flow", "manufacturing flow"));
  c.push_back(cls("management level", "manufacturing concept"));
  c.push_back(cls("control level", "manufacturing concept"));
  c.push_back(cls("capability", "manufacturing concept"));
  c.push_back(cls("capacity", "manufacturing concept"));
  c.push_back(cls("maintenance task", "manufacturing concept"));
  // Multiple-inheritance seed: time boundary under point in time and
  // interval limit.
  c.push_back(cls("time boundary", "point in time"));
  onto.extra_edges.emplace_back("TimeBoundary", "IntervalLimit");

  onto.object_properties = {"manages", "consumes", "produces", "schedules",
                            "monitors", "allocates", "precedes", "follows"};
  onto.datatype_properties = {"quantity", "duration"};
  return onto;
}

// Technical vocabulary external to the standard's own domain.
FixtureOntology build_tech() {
  FixtureOntology onto;
  onto.id = "tech_fixture";
  onto.iri_base = "http://fixtures.example.org/tech";
  onto.category = "ExternalTechnical";

  auto& c = onto.classes;
  c.push_back(cls("equipment"));
  c.push_back(cls("machine tool", "equipment", "", {}, "ISO 13584"));
  c.push_back(cls("spare part", "equipment",
                  "replacement piece held in stock for maintenance", {"part"},
                  "ISO 13584"));
  c.push_back(cls("sensor", "equipment", "", {"sensor unit"}, "IEC 61131"));
  c.push_back(cls("actuator", "equipment", "", {}, "IEC 61131"));
  c.push_back(cls("programmable controller", "equipment", "", {}, "IEC 61131"));
  c.push_back(cls("data model", "", "", {}, "ISO 10303-11"));
  c.push_back(cls("schema", "data model", "", {}, "ISO 10303-11"));
  c.push_back(cls("express language", "data model", "", {}, "ISO 10303-11"));
  c.push_back(cls("entity declaration", "schema"));
  c.push_back(cls("attribute declaration", "schema"));
  c.push_back(cls("product data", "data model", "", {}, "ISO 10303"));
  c.push_back(cls("parts library", "data model", "", {}, "ISO 13584"));
  c.push_back(cls("measurement", ""));
  c.push_back(cls("measurement unit", "measurement"));
  c.push_back(cls("signal", "measurement"));
  c.push_back(cls("event record", "measurement"));

  onto.object_properties = {"measures", "drives", "connects_to", "stores"};
  onto.datatype_properties = {"sampling_rate"};
  return onto;
}

// ---------------------------------------------------------------------------
// Documents
// ---------------------------------------------------------------------------

// Filler prose cycles deterministically through templates and noun phrases.
// The vocabulary deliberately includes ontology labels (to exercise the
// gazetteer) and references that always resolve. It avoids everything the
// checks key on: "adapted from", lead-in colons at definition starts,
// lowercase twins of acronym labels other than "is", digits at line starts
// and unregistered references.
class Filler {
 public:
  std::string paragraph(int sentences) {
    std::string out;
    for (int s = 0; s < sentences; ++s) {
      if (s) out += " ";
      out += sentence();
    }
    return out;
  }

 private:
  std::string sentence() {
    static const std::vector<std::string> nouns = {
        "resource",        "manufacturing process", "production schedule",
        "shop floor data", "time interval",         "data acquisition system",
        "machine tool",    "sensor",                "manufacturing flow",
        "operation",       "component",             "information flow",
        "spare part",      "production chain",      "measurement unit"};
    static const std::vector<std::string> refs = {
        "ISO 15531-1",  "ISO 15531-31", "ISO 15531-32", "ISO 15531-42",
        "ISO 15531-43", "ISO 15531-44", "ISO 10303-11", "ISO 13584",
        "IEC 61131",    "ISO 10303",    "ISO 15531",    "ISO 18629"};
    static const std::vector<std::string> templates = {
        "The %N% is described at the management level and exchanged between the partners of the production chain.",
        "Each %N% shall be identified before the corresponding records are stored for later analysis.",
        "This subclause explains how the %N% relates to the conceptual model given in %R%.",
        "Data collected from the %N% are transferred to the management level in batch mode or on request.",
        "The representation of the %N% is not dependent on any particular implementation method.",
        "Requirements that apply to the %N% are stated in the relevant clauses of %R%.",
        "The model supports multiple views of the %N% so that applications can select the level of detail they need.",
        "When a %N% becomes unavailable, the scheduling application shall be notified without delay.",
        "The exchange structures defined here complement the constructs specified in %R%.",
        "An example involving a %N% and its associated records is given in the annex.",
        "The %N% may be aggregated with other elements to form a composite description.",
        "Information about each %N% is recorded together with the time unit used for its measurement.",
        "The mapping between the %N% and the entities of the schema is normative.",
        "Managing the %N% requires consistent identification across the whole production chain.",
        "The status of every %N% is reported to the management level at the end of each period.",
        "Conformance to this part does not require support for every optional %N% capability.",
        "The attributes of the %N% follow the conventions established in %R%.",
        "A change in the state of the %N% generates an event record with its point in time.",
        "The %N% description includes the capacity and the capability declared by the supplier.",
        "Interoperability between applications handling the %N% is achieved through the common schema."};
    std::string tpl = templates[counter_ % templates.size()];
    std::string noun = nouns[(counter_ / 3) % nouns.size()];
    std::string ref = refs[(counter_ / 7) % refs.size()];
    ++counter_;
    std::string out;
    for (std::size_t i = 0; i < tpl.size();) {
      if (tpl.compare(i, 3, "%N%") == 0) {
        out += noun;
        i += 3;
      } else if (tpl.compare(i, 3, "%R%") == 0) {
        out += ref;
        i += 3;
      } else {
        out.push_back(tpl[i++]);
      }
    }
    return out;
  }

  std::size_t counter_ = 0;
};

struct TermDef {
  std::string number;
  std::string term;
  std::string definition;
};

struct BodyClause {
  std::string number;
  std::string heading;
  int paragraphs;
};

struct PartSpec {
  std::string doc_id;
  std::string standard_ref;
  std::string title;
  std::string scope;
  std::vector<std::string> normative_refs;
  std::vector<TermDef> terms;
  std::vector<BodyClause> body;
  std::string annex_heading;
  std::string special_line;  // inserted into the first body clause
};

std::string render_part(const PartSpec& part, Filler& filler,
                        std::size_t min_bytes) {
  std::ostringstream text;
  text << part.standard_ref
       << " Industrial automation systems and integration - Industrial "
          "manufacturing management data\n";
  text << part.title << "\n\n";

  text << "1 Scope\n" << part.scope << "\n";
  text << filler.paragraph(4) << "\n\n";

  text << "2 Normative references\n";
  text << "The following documents are referred to in the text in such a way "
          "that some or all of their content constitutes requirements of "
          "this document.\n";
  for (const std::string& ref : part.normative_refs) {
    text << "In particular, provisions of " << ref
         << " apply throughout this part.\n";
  }
  text << "\n";

  text << "3 Terms and definitions\n";
  text << "For the purposes of this document, the following terms and "
          "definitions apply.\n";
  for (const TermDef& term : part.terms) {
    text << term.number << " " << term.term << "\n" << term.definition << "\n";
  }
  text << "\n";

  bool first_body = true;
  for (const BodyClause& clause : part.body) {
    text << clause.number << " " << clause.heading << "\n";
    if (first_body && !part.special_line.empty()) {
      text << part.special_line << "\n";
      first_body = false;
    }
    for (int p = 0; p < clause.paragraphs; ++p) {
      text << filler.paragraph(6) << "\n";
    }
    text << "\n";
  }

  text << "Annex A " << part.annex_heading << "\n";
  text << "A.1 General\n" << filler.paragraph(5) << "\n";
  text << "A.2 Examples\n" << filler.paragraph(5) << "\n";
  // Pad to the target size with further annex scenarios so every part lands
  // near 50 KB.
  int extra = 3;
  constexpr std::size_t kTailBytes = 120;
  while (text.str().size() + kTailBytes < min_bytes) {
    text << "A." << extra++ << " Additional scenario\n"
         << filler.paragraph(8) << "\n";
  }
  text << "\n";
  text << "9 Bibliography\n";
  text << "Further background is available in ISO 15531 and in ISO 10303.\n";
  return text.str();
}

// Definitions shared between the seeded duplicate/divergent pairs.
const char* kFlowControlDef =
    "control exercised over the manufacturing flow in a production process";
const char* kOperationDefPart1 =
    "process step that acts on a product during manufacturing";
const char* kOperationDefPart43 =
    "task performed by a resource within a given time interval";

std::vector<PartSpec> build_parts() {
  std::vector<PartSpec> parts;

  PartSpec p1;
  p1.doc_id = "part1";
  p1.standard_ref = "ISO 15531-1";
  p1.title = "Part 1: General overview";
  p1.scope =
      "This part of ISO 15531 provides a general overview of the series and "
      "specifies the functions of the various parts. Once approved by the "
      "committee, each part is published as an IS and is reviewed on a "
      "regular basis.";
  p1.normative_refs = {"ISO 10303-11", "ISO 13584"};
  p1.terms = {
      {"3.1", "flow control", kFlowControlDef},
      {"3.2", "operation", kOperationDefPart1},
      {"3.3", "basic semantic register",
       "register of the semantic units of a language together with their "
       "descriptions [adapted from ISO/TS 16668]"},
      {"3.4", "part", "separately published piece of a multipart standard"},
      {"3.5", "manufacturing management",
       "set of activities controlling the production within a factory"},
  };
  p1.body = {{"4", "Structure of the series", 10},
             {"5", "Relationships with other standards", 10},
             {"6", "Overview of the information models", 10},
             {"7", "Conformance", 8},
             {"8", "Usage guide", 8}};
  p1.annex_heading = "Relationship matrix";
  parts.push_back(std::move(p1));

  PartSpec p31;
  p31.doc_id = "part31";
  p31.standard_ref = "ISO 15531-31";
  p31.title = "Part 31: Resource information model - Basic concepts";
  p31.scope =
      "This part of ISO 15531 introduces the resource information model and "
      "presents the fundamental principles used for the conceptual model of "
      "resource usage management data.";
  p31.normative_refs = {"ISO 15531-1", "ISO 10303-11"};
  p31.terms = {
      {"3.1", "resource",
       "basic element for the management of manufacturing resources"},
      {"3.2", "generic resource",
       "resource describing a whole family of similar resources"},
      {"3.3", "specific resource",
       "resource describing a particular type within a family of resources"},
      {"3.4", "individual resource",
       "resource that is identified as one single unit on the shop floor"},
  };
  p31.body = {{"4", "Universe of discourse", 11},
              {"5", "Resource hierarchy", 11},
              {"6", "Principles of resource management", 10},
              {"7", "Model overview", 9}};
  p31.annex_heading = "Resource classification examples";
  parts.push_back(std::move(p31));

  PartSpec p32;
  p32.doc_id = "part32";
  p32.standard_ref = "ISO 15531-32";
  p32.title = "Part 32: Conceptual model for resources usage management data";
  p32.scope =
      "This part of ISO 15531 specifies the conceptual model for resources "
      "usage management data, structured into logical modules.";
  p32.normative_refs = {"ISO 15531-1", "ISO 15531-31"};
  p32.terms = {
      {"3.1", "resource characteristics", "set of information about a resource"},
      {"3.2", "resource status",
       "resource status: availability or not of the resource"},
      {"3.3", "resource view",
       "resource representation: specific aggregation of resources relevant "
       "for a given task"},
      {"3.4", "resource administration",
       "administrative information related to the resources of a factory"},
  };
  p32.body = {{"4", "Module structure", 11},
              {"5", "Resource characteristics module", 10},
              {"6", "Resource status module", 10},
              {"7", "Resource view module", 10}};
  p32.annex_heading = "EXPRESS listings";
  parts.push_back(std::move(p32));

  PartSpec p42;
  p42.doc_id = "part42";
  p42.standard_ref = "ISO 15531-42";
  p42.title = "Part 42: Time model";
  p42.scope =
      "This part of ISO 15531 provides the definition of concepts related to "
      "the representation of time, needed by scheduling and manufacturing "
      "management applications.";
  p42.normative_refs = {"ISO 15531-1", "ISO 18629"};
  p42.terms = {
      {"3.1", "time interval",
       "portion of the time axis limited by two distinct points in time"},
      {"3.2", "point in time", "location on the time axis without extent"},
      {"3.3", "time unit",
       "reference quantity used to express the duration of an interval"},
      {"3.4", "flow control", kFlowControlDef},
  };
  p42.body = {{"4", "Time domains", 11},
              {"5", "Intervals and points", 11},
              {"6", "Multiple representations of time", 10},
              {"7", "Scheduling considerations", 9}};
  p42.annex_heading = "Calendar examples";
  parts.push_back(std::move(p42));

  PartSpec p43;
  p43.doc_id = "part43";
  p43.standard_ref = "ISO 15531-43";
  p43.title = "Part 43: Data model for manufacturing flow management";
  p43.scope =
      "This part of ISO 15531 addresses the modelling of data for the "
      "management of manufacturing flows as well as flow controls in a shop "
      "floor or in a factory.";
  p43.normative_refs = {"ISO 15531-1", "ISO 15531-42"};
  p43.terms = {
      {"3.1", "manufacturing flow",
       "movement of products, components or information through a factory"},
      {"3.2", "operation", kOperationDefPart43},
      {"3.3", "flow monitoring",
       "observation of the progress of flows on a shop floor"},
  };
  p43.body = {{"4", "Flow categories", 11},
              {"5", "Flow control data", 11},
              {"6", "Simultaneous processes", 10},
              {"7", "Exchange structures", 9}};
  p43.annex_heading = "Flow diagrams";
  parts.push_back(std::move(p43));

  PartSpec p44;
  p44.doc_id = "part44";
  p44.standard_ref = "ISO 15531-44";
  p44.title = "Part 44: Information modelling for shop floor data acquisition";
  p44.scope =
      "This part of ISO 15531 addresses the modelling of the data collected "
      "from data acquisition systems at control level to be stored and "
      "processed at the manufacturing management level.";
  p44.normative_refs = {"ISO 15531-1", "ISO 15531-43", "ISO 13584"};
  p44.terms = {
      {"3.1", "shop floor data",
       "quantitative or qualitative data collected from acquisition systems "
       "on the shop floor"},
      {"3.2", "data acquisition",
       "collection of measurements and events from the control level"},
      {"3.3", "time stamping",
       "recording of the point in time at which an event occurs"},
  };
  p44.body = {{"4", "Acquisition architecture", 11},
              {"5", "Collected data model", 11},
              {"6", "Time stamping requirements", 10},
              {"7", "Specialization through libraries", 9}};
  p44.annex_heading = "Acquisition scenarios";
  p44.special_line =
      "The checksum conventions follow the byte ordering rules of ISO 99999, "
      "which remains outside the registered series.";
  parts.push_back(std::move(p44));

  return parts;
}

const char* kReferenceRules = R"(// Standard-reference phase: lifts citations of other normative documents.
phase references;

// "ISO 15531-44", "ISO 10303" or "ISO/TS 16668"
rule iso_ref priority 10:
  ({Word=="ISO"} ("/" {Word})? {Number} ("-" {Number})?)#ref
  -> Reference{standard_ref=$ref};

// "IEC 61131" with an optional part number
rule iec_ref priority 10:
  ({Word=="IEC"} {Number} ("-" {Number})?)#ref
  -> Reference{standard_ref=$ref};
)";

json build_registry() {
  auto entry = [](const char* ref, const char* title) {
    return json{{"standard_ref", ref}, {"title", title}};
  };
  return json::array({
      entry("ISO 15531", "Industrial manufacturing management data"),
      entry("ISO 10303",
            "Product data representation and exchange"),
      entry("ISO 10303-11", "The EXPRESS language reference manual"),
      entry("ISO 13584", "Parts library"),
      entry("ISO 13584-24", "Logical resource: Logical model of supplier library"),
      entry("ISO/TS 16668", "Basic semantic register rules"),
      entry("ISO 8000", "Data quality"),
      entry("IEC 61131", "Programmable controllers"),
      entry("ISO 18629", "Process specification language"),
      entry("ISO 15926",
            "Integration of life-cycle data for process plants"),
      entry("ISO 16739", "Industry Foundation Classes"),
      entry("ISO 24617", "Language resource management - Semantic annotation"),
  });
}

}  // namespace

int main(int argc, char** argv) {
  fs::path out_dir = argc > 1 ? argv[1] : "fixtures";

  // Ontologies, native and RDF/XML twins.
  for (const FixtureOntology& onto : {build_isto(), build_iso15531(), build_tech()}) {
    write_file(out_dir / "ontologies" / (onto.id + ".json"),
               to_native_json(onto).dump(2) + "\n");
    write_file(out_dir / "ontologies" / (onto.id + ".rdf"), to_rdfxml(onto));
  }

  // Corpus.
  json manifest_docs = json::array();
  Filler filler;
  for (const PartSpec& part : build_parts()) {
    std::string text = render_part(part, filler, 48 * 1024);
    write_file(out_dir / "mandate6" / (part.doc_id + ".txt"), text);
    manifest_docs.push_back(json{{"doc_id", part.doc_id},
                                 {"standard_ref", part.standard_ref},
                                 {"title", part.title},
                                 {"path", part.doc_id + ".txt"}});
  }
  json manifest{{"corpus_id", "mandate6"}, {"documents", std::move(manifest_docs)}};
  write_file(out_dir / "mandate6" / "manifest.json", manifest.dump(2) + "\n");

  write_file(out_dir / "registry.json", build_registry().dump(2) + "\n");
  write_file(out_dir / "rules" / "references.rules", kReferenceRules);

  std::cout << "fixtures written to " << out_dir << "\n";
  return 0;
}
