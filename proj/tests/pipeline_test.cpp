#include <numeric>
#include <string>

#include <doctest.h>
#include <json.hpp>

#include "ufold/pipeline.hpp"

using namespace ufold;

namespace {

const std::filesystem::path kFixtures = UFOLD_FIXTURE_DIR;

FindOptions options_for(const char* corpus, std::string symbol) {
  FindOptions opt;
  opt.query.name = std::move(symbol);
  opt.root = kFixtures / corpus;
  return opt;
}

std::size_t member_total(const Report& report) {
  std::size_t total = 0;
  for (const ReportCluster& c : report.clusters) total += c.members.size();
  return total;
}

}  // namespace

TEST_SUITE("pipeline") {

TEST_CASE("find on the small corpus wires every stage together") {
  FindResult r = run_find(options_for("small", "initCapacity"));
  CHECK(r.sites.size() == 3);
  CHECK(r.matrix.size() == 3);
  CHECK(r.report.files_scanned == 5);
  CHECK(r.report.warnings.empty());
  CHECK(r.report.usage_count == 3);
  CHECK(member_total(r.report) == 3);
  CHECK(r.report.symbol == "initCapacity");
  CHECK(r.report.kind == "any");
  CHECK(r.report.threshold == doctest::Approx(0.88));

  // every usage landed in exactly one cluster
  std::vector<char> seen(r.sites.size(), 0);
  for (const UsageCluster& c : r.clusters) {
    for (std::uint32_t m : c.members) {
      CHECK(!seen[m]);
      seen[m] = 1;
    }
  }
  CHECK(std::accumulate(seen.begin(), seen.end(), 0) == 3);
}

TEST_CASE("clusters render largest first with labeled lines") {
  FindResult r = run_find(options_for("small", "initCapacity"));
  std::string text = render_text(r.report);
  CHECK(text.find("usage clusters for 'initCapacity'") != std::string::npos);
  CHECK(text.find("Cluster 1 (") != std::string::npos);
  CHECK(text.find(" line 10") != std::string::npos);
  CHECK(text.find("initCapacity(expectedSize)") != std::string::npos);
  for (std::size_t c = 1; c < r.report.clusters.size(); ++c) {
    CHECK(r.report.clusters[c - 1].members.size() >=
          r.report.clusters[c].members.size());
  }
}

TEST_CASE("machine output round-trips sizes and members exactly") {
  FindResult r = run_find(options_for("small", "initCapacity"));
  nlohmann::json doc = nlohmann::json::parse(render_json(r.report));
  CHECK(doc["usage_count"] == 3);
  CHECK(doc["cluster_count"] == r.report.clusters.size());
  REQUIRE(doc["clusters"].size() == r.report.clusters.size());
  for (std::size_t c = 0; c < r.report.clusters.size(); ++c) {
    const ReportCluster& rc = r.report.clusters[c];
    const auto& jc = doc["clusters"][c];
    CHECK(jc["size"] == rc.members.size());
    REQUIRE(jc["members"].size() == rc.members.size());
    for (std::size_t i = 0; i < rc.members.size(); ++i) {
      CHECK(jc["members"][i]["file"] == rc.members[i].file);
      CHECK(jc["members"][i]["line"] == rc.members[i].line);
      CHECK(jc["members"][i]["snippet"] == rc.members[i].snippet);
    }
    CHECK(jc["representative"] == jc["members"][0]);
  }
}

TEST_CASE("two runs emit byte-identical machine output") {
  FindResult a = run_find(options_for("small", "initCapacity"));
  FindResult b = run_find(options_for("small", "initCapacity"));
  CHECK(render_json(a.report) == render_json(b.report));
  CHECK(render_text(a.report) == render_text(b.report));
}

TEST_CASE("serial and parallel runs agree exactly") {
  FindOptions opt = options_for("small", "initCapacity");
  FindResult par = run_find(opt);
  opt.parallel = false;
  FindResult ser = run_find(opt);
  CHECK(par.matrix.cells() == ser.matrix.cells());
  CHECK(render_json(par.report) == render_json(ser.report));
}

TEST_CASE("unparseable files become warnings, not failures") {
  FindResult r = run_find(options_for("errors", "twice"));
  CHECK(r.report.files_scanned == 2);
  REQUIRE(r.report.warnings.size() == 1);
  CHECK(r.report.warnings[0].file == "Broken.java");
  CHECK(r.report.warnings[0].message.find("Broken.java:") !=
        std::string::npos);
  CHECK(r.report.warnings[0].message.find("skipped") != std::string::npos);
  // the good file still contributes its usages
  CHECK(r.sites.empty());  // `twice` is only declared, never used
  FindResult used = run_find(options_for("errors", "v"));
  CHECK(used.sites.size() == 2);
}

TEST_CASE("explicit include globs narrow the corpus") {
  FindOptions opt = options_for("small", "initCapacity");
  opt.include_globs = {"**/Maps.java"};
  FindResult r = run_find(opt);
  CHECK(r.report.files_scanned == 1);
  CHECK(r.sites.size() == 1);

  opt = options_for("small", "initCapacity");
  opt.exclude_globs = {"**/Sets.java"};
  FindResult without = run_find(opt);
  CHECK(without.report.files_scanned == 4);
  CHECK(without.sites.size() == 1);
}

TEST_CASE("a corpus with no matches reports zero usages and no clusters") {
  FindResult r = run_find(options_for("small", "absentSymbol"));
  CHECK(r.report.usage_count == 0);
  CHECK(r.report.clusters.empty());
  CHECK(r.matrix.size() == 0);
  std::string text = render_text(r.report);
  CHECK(text.find("0 usages in 0 clusters") != std::string::npos);
}

TEST_CASE("missing corpus root raises a corpus error") {
  CHECK_THROWS_AS(run_find(options_for("no-such-corpus", "x")), CorpusError);
}

}  // TEST_SUITE
