#include <doctest.h>
#include <zlib.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "kgforge/io/input.hpp"
#include "kgforge/rdf/isomorphism.hpp"
#include "kgforge/rdf/ntriples.hpp"
#include "kgforge/rdf/serialize.hpp"
#include "kgforge/rdf/turtle.hpp"
#include "kgforge/rdf/vocab.hpp"
#include "kgforge/util/errors.hpp"
#include "testutil/oracles.hpp"
#include "testutil/random_graph.hpp"

using namespace kgforge;
using rdf::Graph;
using rdf::Term;
using rdf::Triple;

namespace {
Term iri(const std::string& s) { return Term::iri(s); }
}  // namespace

TEST_CASE("term invariants") {
  CHECK_THROWS_AS(Term::iri("no-scheme"), std::invalid_argument);
  CHECK_THROWS_AS(Term::iri("http://a b"), std::invalid_argument);
  CHECK_THROWS_AS(Term::iri("http://a<b>"), std::invalid_argument);
  CHECK_THROWS_AS(Term::blank("a-b"), std::invalid_argument);
  CHECK_THROWS_AS(Term::blank(""), std::invalid_argument);
  CHECK_THROWS_AS(Term::langLiteral("x", "not a tag"), std::invalid_argument);
  CHECK_THROWS_AS(Term::literal("x", std::string(rdf::kLangString)), std::invalid_argument);

  CHECK(Term::literal("x").datatype() == rdf::kXsdString);
  CHECK(Term::langLiteral("x", "en").datatype() == rdf::kLangString);
  // lexical equality, no value normalization
  CHECK(Term::literal("1", "http://www.w3.org/2001/XMLSchema#int") !=
        Term::literal("01", "http://www.w3.org/2001/XMLSchema#int"));

  CHECK_THROWS_AS(Triple(Term::literal("x"), iri("http://p"), iri("http://o")),
                  std::invalid_argument);
  CHECK_THROWS_AS(Triple(iri("http://s"), Term::blank("b"), iri("http://o")),
                  std::invalid_argument);
}

TEST_CASE("graph set semantics and indexes") {
  Graph g;
  Triple t(iri("http://a"), iri("http://p"), Term::literal("x"));
  CHECK(g.insert(t));
  CHECK_FALSE(g.insert(t));
  CHECK(g.size() == 1);
  CHECK(g.contains(t));
  CHECK(g.distinctSubjects() == 1);
  CHECK(g.distinctPredicates() == 1);
  CHECK(g.distinctObjects() == 1);
}

TEST_CASE("parse_ntriples minimal and identity cases") {
  Graph g = rdf::parseNTriples(std::string("<http://a> <http://p> \"x\" .\n"));
  REQUIRE(g.size() == 1);
  const auto& t = g.triples()[0];
  CHECK(t.subject == iri("http://a"));
  CHECK(t.predicate == iri("http://p"));
  CHECK(t.object == Term::literal("x"));

  CHECK(rdf::parseNTriples(std::string("")).empty());
  CHECK(rdf::parseNTriples(std::string("# only a comment\n\n")).empty());
}

TEST_CASE("parse_ntriples deduplicates repeated lines") {
  // brute-force line comparison: 3 lines, one duplicated -> 2 distinct
  std::string text =
      "<http://a> <http://p> <http://b> .\n"
      "<http://a> <http://p> \"v\" .\n"
      "<http://a> <http://p> <http://b> .\n";
  Graph g = rdf::parseNTriples(text);
  CHECK(g.size() == 2);
}

TEST_CASE("parse_ntriples escapes, datatypes, language tags") {
  std::string text =
      "<http://a> <http://p> \"tab\\there\\nnl\" .\n"
      "<http://a> <http://p> \"\\u00E8\" .\n"
      "<http://a> <http://p> \"\\U0001F600\" .\n"
      "<http://a> <http://q> \"5\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
      "<http://a> <http://q> \"ciao\"@it .\n"
      "<http://\\u00E9> <http://p> _:b1 .\n";
  Graph g = rdf::parseNTriples(text);
  CHECK(g.size() == 6);
  CHECK(g.contains(Triple(iri("http://a"), iri("http://p"), Term::literal("tab\there\nnl"))));
  CHECK(g.contains(Triple(iri("http://a"), iri("http://p"), Term::literal("\xC3\xA8"))));
  CHECK(g.contains(Triple(iri("http://a"), iri("http://p"), Term::literal("\xF0\x9F\x98\x80"))));
  CHECK(g.contains(Triple(iri("http://a"), iri("http://q"),
                          Term::literal("5", "http://www.w3.org/2001/XMLSchema#integer"))));
  CHECK(g.contains(Triple(iri("http://a"), iri("http://q"), Term::langLiteral("ciao", "it"))));
  CHECK(g.contains(Triple(iri("http://\xC3\xA9"), iri("http://p"), Term::blank("b1"))));
}

TEST_CASE("parse_ntriples reports line numbers on errors") {
  auto checkLine = [](const std::string& text, std::uint64_t line) {
    try {
      rdf::parseNTriples(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
    }
  };
  checkLine("<http://a> <http://p> <http://b> .\n<http://a> <http://p> \"unterminated .\n", 2);
  checkLine("<http://a> <http://p> <http://b>\n", 1);  // missing dot
  checkLine("<no space!> <http://p> <http://b> .\n", 1);
  checkLine("<http://a> <http://p> \"x\"^^<http://dt> extra .\n", 1);
  checkLine("<http://a> <http://p> \"\\uZZZZ\" .\n", 1);
}

TEST_CASE("parse_turtle single prefixed triple") {
  auto [g, prefixes] = rdf::parseTurtle(std::string("@prefix ex: <http://e/> . ex:s ex:p ex:o ."));
  REQUIRE(g.size() == 1);
  CHECK(g.contains(Triple(iri("http://e/s"), iri("http://e/p"), iri("http://e/o"))));
  CHECK(prefixes.namespaceFor("ex") == std::string("http://e/"));
}

TEST_CASE("parse_turtle object list expansion matches ntriples oracle") {
  auto [g, _] = rdf::parseTurtle(std::string("@prefix ex: <http://e/> . ex:s ex:p \"1\", \"2\" ."));
  Graph expected = rdf::parseNTriples(std::string("<http://e/s> <http://e/p> \"1\" .\n"
                                                  "<http://e/s> <http://e/p> \"2\" .\n"));
  CHECK(g.size() == 2);
  CHECK(rdf::isomorphic(g, expected));
}

TEST_CASE("parse_turtle 'a' keyword") {
  auto [g, _] = rdf::parseTurtle(std::string("@prefix ex: <http://e/> . ex:s a ex:C ."));
  REQUIRE(g.size() == 1);
  CHECK(g.triples()[0].predicate == iri(std::string(rdf::vocab::rdf_type)));
}

TEST_CASE("parse_turtle predicate lists, anonymous blanks, shorthand literals") {
  std::string doc =
      "@prefix ex: <http://e/> .\n"
      "ex:s ex:p [ ex:q 1 ; ex:r 2.5 ; ex:t 1.0e3 ; ex:u true ] ;\n"
      "     ex:v _:named, [] .\n";
  auto [g, _] = rdf::parseTurtle(doc);
  Graph expected = rdf::parseNTriples(std::string(
      "<http://e/s> <http://e/p> _:b0 .\n"
      "_:b0 <http://e/q> \"1\"^^<http://www.w3.org/2001/XMLSchema#integer> .\n"
      "_:b0 <http://e/r> \"2.5\"^^<http://www.w3.org/2001/XMLSchema#decimal> .\n"
      "_:b0 <http://e/t> \"1.0e3\"^^<http://www.w3.org/2001/XMLSchema#double> .\n"
      "_:b0 <http://e/u> \"true\"^^<http://www.w3.org/2001/XMLSchema#boolean> .\n"
      "<http://e/s> <http://e/v> _:named .\n"
      "<http://e/s> <http://e/v> _:b1 .\n"));
  CHECK(rdf::isomorphic(g, expected));
  // anonymous labels are b0, b1, ... in document order
  CHECK(g.contains(Triple(iri("http://e/s"), iri("http://e/p"), Term::blank("b0"))));
  CHECK(g.contains(Triple(iri("http://e/s"), iri("http://e/v"), Term::blank("b1"))));
}

TEST_CASE("parse_turtle base resolution") {
  std::string doc =
      "@base <http://example.org/dir/doc> .\n"
      "@prefix ex: <http://e/> .\n"
      "<rel> ex:p <#frag> , </abs> , <../up> .\n";
  auto [g, _] = rdf::parseTurtle(doc);
  CHECK(g.contains(Triple(iri("http://example.org/dir/rel"), iri("http://e/p"),
                          iri("http://example.org/dir/doc#frag"))));
  CHECK(g.contains(
      Triple(iri("http://example.org/dir/rel"), iri("http://e/p"), iri("http://example.org/abs"))));
  CHECK(g.contains(
      Triple(iri("http://example.org/dir/rel"), iri("http://e/p"), iri("http://example.org/up"))));
}

TEST_CASE("parse_turtle error reporting") {
  CHECK_THROWS_WITH_AS(rdf::parseTurtle(std::string("ex:s ex:p ex:o .")),
                       doctest::Contains("undeclared prefix 'ex:'"), ParseError);
  CHECK_THROWS_WITH_AS(
      rdf::parseTurtle(std::string("@prefix ex: <http://e/> . ex:s ex:p (1 2) .")),
      doctest::Contains("RDF collections"), ParseError);
  CHECK_THROWS_WITH_AS(rdf::parseTurtle(std::string("@prefix ex: <http://e/> . ex:s ex:p '1' .")),
                       doctest::Contains("single-quoted"), ParseError);
  try {
    rdf::parseTurtle(std::string("@prefix ex: <http://e/> .\nex:s ex:p (1) ."));
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);  // position retained
  }
}

TEST_CASE("turtle and manual ntriples expansion parse isomorphically") {
  std::string ttl =
      "@prefix ex: <http://e/> .\n"
      "ex:a a ex:C ; ex:p \"x\"@en ; ex:q ex:b , [ ex:r ex:c ] .\n";
  std::string nt =
      "<http://e/a> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> <http://e/C> .\n"
      "<http://e/a> <http://e/p> \"x\"@en .\n"
      "<http://e/a> <http://e/q> <http://e/b> .\n"
      "<http://e/a> <http://e/q> _:z .\n"
      "_:z <http://e/r> <http://e/c> .\n";
  auto [g1, _] = rdf::parseTurtle(ttl);
  Graph g2 = rdf::parseNTriples(nt);
  CHECK(rdf::isomorphic(g1, g2));
  CHECK(testutil::isomorphicBruteForce(g1, g2));
}

TEST_CASE("serialize_canonical basics") {
  CHECK(rdf::serializeCanonical(Graph{}).empty());

  Graph g;
  g.insert(Triple(iri("http://b"), iri("http://p"), Term::literal("line\n\"q\"")));
  g.insert(Triple(iri("http://a"), iri("http://p"), Term::langLiteral("x", "en")));
  std::string out = rdf::serializeCanonical(g);
  CHECK(out ==
        "<http://a> <http://p> \"x\"@en .\n"
        "<http://b> <http://p> \"line\\n\\\"q\\\"\" .\n");
}

TEST_CASE("serialize_canonical is insertion-order invariant") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    Graph g = testutil::randomGraph(rng);
    Graph h = testutil::shuffled(g, rng);
    CHECK(rdf::serializeCanonical(g) == rdf::serializeCanonical(h));
  }
}

TEST_CASE("round-trip: parse(serialize(g)) isomorphic to g") {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 100; ++round) {
    Graph g = testutil::randomGraph(rng);
    Graph back = rdf::parseNTriples(rdf::serializeCanonical(g));
    CHECK(rdf::isomorphic(g, back));
  }
}

TEST_CASE("match agrees with linear-scan oracle") {
  std::mt19937_64 rng(13);
  testutil::RandomGraphConfig cfg;
  cfg.max_triples = 100;
  Graph g = testutil::randomGraph(rng, cfg);

  CHECK(g.match(std::nullopt, std::nullopt, std::nullopt).size() == g.size());
  CHECK(g.match(iri("http://nowhere/x"), std::nullopt, std::nullopt).empty());

  for (int round = 0; round < 200; ++round) {
    std::optional<Term> s, p, o;
    if (rng() % 2) s = testutil::randomSubject(rng, cfg);
    if (rng() % 2) p = testutil::randomPredicate(rng, cfg);
    if (rng() % 2) o = testutil::randomObject(rng, cfg);
    auto got = g.match(s, p, o);
    auto want = testutil::scanMatch(g, s, p, o);
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    CHECK(got == want);
  }
}

TEST_CASE("isomorphic: relabeling, ground mismatch, factorial oracle") {
  Graph g1 = rdf::parseNTriples(std::string("_:a <http://p> _:b .\n_:b <http://p> _:a .\n"));
  Graph g2 = rdf::parseNTriples(std::string("_:z <http://p> _:y .\n_:y <http://p> _:z .\n"));
  CHECK(rdf::isomorphic(g1, g2));

  Graph g3 = rdf::parseNTriples(std::string("<http://a> <http://p> <http://b> .\n"));
  Graph g4 = rdf::parseNTriples(std::string("<http://a> <http://p> <http://c> .\n"));
  CHECK_FALSE(rdf::isomorphic(g3, g4));

  // same blank structure, different ground triple counts
  CHECK_FALSE(rdf::isomorphic(g1, g3));

  std::mt19937_64 rng(17);
  testutil::RandomGraphConfig cfg;
  cfg.max_triples = 20;
  cfg.blank_pool = 4;
  for (int round = 0; round < 60; ++round) {
    Graph a = testutil::randomGraph(rng, cfg);
    // b: relabeled copy (always isomorphic)
    std::ostringstream relabeled;
    for (const auto& t : a.triples()) {
      auto ren = [](const Term& x) {
        return x.isBlank() ? Term::blank("ren_" + x.value()) : x;
      };
      relabeled << rdf::toNTriples(Triple(ren(t.subject), t.predicate, ren(t.object))) << "\n";
    }
    Graph b = rdf::parseNTriples(relabeled.str());
    CHECK(rdf::isomorphic(a, b) == testutil::isomorphicBruteForce(a, b));
    CHECK(rdf::isomorphic(a, b));

    // c: random independent graph — oracle agreement either way
    Graph c = testutil::randomGraph(rng, cfg);
    CHECK(rdf::isomorphic(a, c) == testutil::isomorphicBruteForce(a, c));
  }
}

TEST_CASE("isomorphic guards against blank-node blowup") {
  Graph a, b;
  for (int i = 0; i < 80; ++i) {
    a.insert(Triple(Term::blank("a" + std::to_string(i)), iri("http://p"), Term::literal("x")));
    b.insert(Triple(Term::blank("b" + std::to_string(i)), iri("http://p"), Term::literal("x")));
  }
  rdf::IsomorphismOptions opts;
  opts.max_blank_nodes = 16;
  CHECK_THROWS_AS(rdf::isomorphic(a, b, opts), ResourceLimitError);
}

TEST_CASE("blank-node prefix prevents cross-document capture") {
  rdf::NTriplesOptions o1{.blank_prefix = "d0_", .source_name = "a"};
  rdf::NTriplesOptions o2{.blank_prefix = "d1_", .source_name = "b"};
  Graph g1 = rdf::parseNTriples(std::string("_:x <http://p> \"from-doc-1\" .\n"), o1);
  Graph g2 = rdf::parseNTriples(std::string("_:x <http://p> \"from-doc-2\" .\n"), o2);
  g1.merge(g2);
  CHECK(g1.size() == 2);
  CHECK(g1.distinctSubjects() == 2);
}

TEST_CASE("gzip input round-trips") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "kgforge-gz-test";
  fs::create_directories(dir);
  fs::path plain = dir / "data.nt";
  {
    std::ofstream out(plain);
    out << "<http://a> <http://p> \"gz\" .\n";
  }
  fs::path gz = dir / "data.nt.gz";
  {
    gzFile f = gzopen(gz.string().c_str(), "wb");
    REQUIRE(f != nullptr);
    std::string content = "<http://a> <http://p> \"gz\" .\n";
    gzwrite(f, content.data(), static_cast<unsigned>(content.size()));
    gzclose(f);
  }
  auto in = io::openInput(gz);
  Graph g = rdf::parseNTriples(*in);
  CHECK(g.size() == 1);
  CHECK(g.contains(Triple(iri("http://a"), iri("http://p"), Term::literal("gz"))));
  fs::remove_all(dir);
}
