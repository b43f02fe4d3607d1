#pragma once

#include <string_view>

// Well-known vocabulary IRIs used across the toolchain.
namespace kgforge::rdf::vocab {

// RDF / RDFS / OWL / XSD
inline constexpr std::string_view rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdfs_label = "http://www.w3.org/2000/01/rdf-schema#label";
inline constexpr std::string_view rdfs_comment = "http://www.w3.org/2000/01/rdf-schema#comment";
inline constexpr std::string_view rdfs_seeAlso = "http://www.w3.org/2000/01/rdf-schema#seeAlso";
inline constexpr std::string_view rdfs_isDefinedBy =
    "http://www.w3.org/2000/01/rdf-schema#isDefinedBy";
inline constexpr std::string_view rdfs_subClassOf =
    "http://www.w3.org/2000/01/rdf-schema#subClassOf";
inline constexpr std::string_view rdfs_subPropertyOf =
    "http://www.w3.org/2000/01/rdf-schema#subPropertyOf";
inline constexpr std::string_view rdfs_domain = "http://www.w3.org/2000/01/rdf-schema#domain";
inline constexpr std::string_view rdfs_range = "http://www.w3.org/2000/01/rdf-schema#range";

inline constexpr std::string_view owl_Class = "http://www.w3.org/2002/07/owl#Class";
inline constexpr std::string_view owl_ObjectProperty =
    "http://www.w3.org/2002/07/owl#ObjectProperty";
inline constexpr std::string_view owl_DatatypeProperty =
    "http://www.w3.org/2002/07/owl#DatatypeProperty";
inline constexpr std::string_view owl_AnnotationProperty =
    "http://www.w3.org/2002/07/owl#AnnotationProperty";
inline constexpr std::string_view owl_TransitiveProperty =
    "http://www.w3.org/2002/07/owl#TransitiveProperty";
inline constexpr std::string_view owl_disjointWith =
    "http://www.w3.org/2002/07/owl#disjointWith";
inline constexpr std::string_view owl_inverseOf = "http://www.w3.org/2002/07/owl#inverseOf";
inline constexpr std::string_view owl_propertyChainAxiom =
    "http://www.w3.org/2002/07/owl#propertyChainAxiom";
inline constexpr std::string_view owl_versionInfo = "http://www.w3.org/2002/07/owl#versionInfo";
inline constexpr std::string_view owl_imports = "http://www.w3.org/2002/07/owl#imports";

inline constexpr std::string_view xsd_ns = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";
inline constexpr std::string_view xsd_decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view xsd_double = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view xsd_boolean = "http://www.w3.org/2001/XMLSchema#boolean";

// SKOS
inline constexpr std::string_view skos_ConceptScheme =
    "http://www.w3.org/2004/02/skos/core#ConceptScheme";
inline constexpr std::string_view skos_Concept = "http://www.w3.org/2004/02/skos/core#Concept";
inline constexpr std::string_view skos_inScheme = "http://www.w3.org/2004/02/skos/core#inScheme";
inline constexpr std::string_view skos_prefLabel =
    "http://www.w3.org/2004/02/skos/core#prefLabel";
inline constexpr std::string_view skos_notation = "http://www.w3.org/2004/02/skos/core#notation";
inline constexpr std::string_view skos_broader = "http://www.w3.org/2004/02/skos/core#broader";

// DCAT / DCT / VoID
inline constexpr std::string_view dcat_Dataset = "http://www.w3.org/ns/dcat#Dataset";
inline constexpr std::string_view dcat_Distribution = "http://www.w3.org/ns/dcat#Distribution";
inline constexpr std::string_view dcat_distribution = "http://www.w3.org/ns/dcat#distribution";
inline constexpr std::string_view dcat_downloadURL = "http://www.w3.org/ns/dcat#downloadURL";
inline constexpr std::string_view dcat_mediaType = "http://www.w3.org/ns/dcat#mediaType";
inline constexpr std::string_view dct_title = "http://purl.org/dc/terms/title";
inline constexpr std::string_view dct_description = "http://purl.org/dc/terms/description";
inline constexpr std::string_view dct_license = "http://purl.org/dc/terms/license";
inline constexpr std::string_view dct_publisher = "http://purl.org/dc/terms/publisher";
inline constexpr std::string_view dct_identifier = "http://purl.org/dc/terms/identifier";
inline constexpr std::string_view void_triples = "http://rdfs.org/ns/void#triples";

// RML / R2RML / QL
inline constexpr std::string_view rr_ns = "http://www.w3.org/ns/r2rml#";
inline constexpr std::string_view rml_ns = "http://semweb.mmlab.be/ns/rml#";
inline constexpr std::string_view ql_CSV = "http://semweb.mmlab.be/ns/ql#CSV";
inline constexpr std::string_view fmt_NTriples = "http://www.w3.org/ns/formats/N-Triples";

}  // namespace kgforge::rdf::vocab
