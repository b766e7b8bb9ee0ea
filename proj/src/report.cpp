#include "ieval/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ieval/error.hpp"

namespace ieval {

namespace {

using nlohmann::json;

// Tables show one-decimal percent; JSON keeps full precision.
std::string pct(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", fraction * 100.0);
  return buf;
}

std::string fixed1(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", value);
  return buf;
}

json prf_json(const PRF& scores) {
  return {{"p", scores.precision}, {"r", scores.recall}, {"f1", scores.f1}};
}

json report_json(const ScoreReport& report) {
  json out;
  out["criterion"] = report.criterion;
  out["averaging"] = to_string(report.averaging);
  json overall = prf_json(report.overall_prf);
  overall["tp"] = report.overall.tp;
  overall["fp"] = report.overall.fp;
  overall["fn"] = report.overall.fn;
  out["overall"] = std::move(overall);
  json per_type = json::object();
  for (const auto& [label, counts] : report.per_type) {
    json entry = prf_json(prf(counts));
    entry["tp"] = counts.tp;
    entry["fp"] = counts.fp;
    entry["fn"] = counts.fn;
    entry["support"] = counts.gold_support();
    per_type[label] = std::move(entry);
  }
  out["per_type"] = std::move(per_type);
  if (!report.per_novelty.empty()) {
    json per_novelty = json::object();
    for (const auto& [name, bucket] : report.per_novelty) {
      json entry = prf_json(bucket.scores());
      entry["tp_precision"] = bucket.tp_precision;
      entry["fp"] = bucket.fp;
      entry["tp_recall"] = bucket.tp_recall;
      entry["fn"] = bucket.fn;
      per_novelty[name] = std::move(entry);
    }
    out["per_novelty"] = std::move(per_novelty);
  }
  return out;
}

const char* kNoveltyOrder[] = {"exact", "partial", "new"};

void report_markdown(const ScoreReport& report, const std::string& title,
                     std::ostream& out) {
  out << "## " << title << " (" << report.criterion << ", "
      << to_string(report.averaging) << ")\n\n";
  out << "| label | P | R | F1 | support |\n";
  out << "|:------|------:|------:|------:|--------:|\n";
  for (const auto& [label, counts] : report.per_type) {
    const PRF scores = prf(counts);
    out << "| " << label << " | " << pct(scores.precision) << " | "
        << pct(scores.recall) << " | " << pct(scores.f1) << " | "
        << counts.gold_support() << " |\n";
  }
  out << "| ALL | " << pct(report.overall_prf.precision) << " | "
      << pct(report.overall_prf.recall) << " | " << pct(report.overall_prf.f1)
      << " | " << report.overall.gold_support() << " |\n\n";

  if (!report.per_novelty.empty()) {
    out << "### " << title << " by novelty\n\n";
    out << "| class | P | R | F1 | support |\n";
    out << "|:------|------:|------:|------:|--------:|\n";
    for (const char* name : kNoveltyOrder) {
      auto it = report.per_novelty.find(name);
      if (it == report.per_novelty.end()) continue;
      const PRF scores = it->second.scores();
      out << "| " << name << " | " << pct(scores.precision) << " | "
          << pct(scores.recall) << " | " << pct(scores.f1) << " | "
          << it->second.tp_recall + it->second.fn << " |\n";
    }
    out << '\n';
  }
}

void report_csv(const ScoreReport& report, const std::string& section,
                std::ostream& out) {
  const PRF overall = report.overall_prf;
  out << section << ",ALL," << pct(overall.precision) << ','
      << pct(overall.recall) << ',' << pct(overall.f1) << ','
      << report.overall.gold_support() << '\n';
  for (const auto& [label, counts] : report.per_type) {
    const PRF scores = prf(counts);
    out << section << ',' << label << ',' << pct(scores.precision) << ','
        << pct(scores.recall) << ',' << pct(scores.f1) << ','
        << counts.gold_support() << '\n';
  }
  for (const char* name : kNoveltyOrder) {
    auto it = report.per_novelty.find(name);
    if (it == report.per_novelty.end()) continue;
    const PRF scores = it->second.scores();
    out << section << "_novelty," << name << ',' << pct(scores.precision)
        << ',' << pct(scores.recall) << ',' << pct(scores.f1) << ','
        << it->second.tp_recall + it->second.fn << '\n';
  }
}

json stats_json(const DatasetStats& stats) {
  return {{"sentences", stats.sentences},
          {"tokens", stats.tokens},
          {"mention_occurrences", stats.mention_occurrences},
          {"unique_mentions", stats.unique_mentions},
          {"relations", stats.relations}};
}

json overlap_row_json(const OverlapRow& row) {
  json out;
  out["exact"] = row.exact;
  out["partial"] = row.partial;
  out["new"] = row.fresh;
  const long total = row.total();
  out["support"] = total;
  auto proportion = [total](long count) {
    return total == 0 ? 0.0
                      : static_cast<double>(count) / static_cast<double>(total);
  };
  out["exact_proportion"] = proportion(row.exact);
  out["partial_proportion"] = proportion(row.partial);
  out["new_proportion"] = proportion(row.fresh);
  return out;
}

}  // namespace

OutputFormat output_format_from_string(const std::string& name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "markdown" || name == "md") return OutputFormat::Markdown;
  if (name == "csv") return OutputFormat::Csv;
  throw Error(ErrorCode::UnsupportedFormat, "unknown output format '" + name + "'");
}

std::string render_score(const EvaluationBundle& bundle, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      json out;
      out["ner"] = report_json(bundle.ner);
      if (bundle.re_strict) out["re_strict"] = report_json(*bundle.re_strict);
      if (bundle.re_boundaries)
        out["re_boundaries"] = report_json(*bundle.re_boundaries);
      if (bundle.re_relaxed)
        out["re_relaxed"] = report_json(*bundle.re_relaxed);
      return out.dump(2) + "\n";
    }
    case OutputFormat::Markdown: {
      std::ostringstream out;
      out << "# Evaluation report\n\n";
      report_markdown(bundle.ner, "NER", out);
      if (bundle.re_strict) report_markdown(*bundle.re_strict, "RE", out);
      if (bundle.re_boundaries)
        report_markdown(*bundle.re_boundaries, "RE", out);
      if (bundle.re_relaxed) report_markdown(*bundle.re_relaxed, "RE", out);
      return out.str();
    }
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "section,label,p,r,f1,support\n";
      report_csv(bundle.ner, "ner", out);
      if (bundle.re_strict) report_csv(*bundle.re_strict, "re_strict", out);
      if (bundle.re_boundaries)
        report_csv(*bundle.re_boundaries, "re_boundaries", out);
      if (bundle.re_relaxed) report_csv(*bundle.re_relaxed, "re_relaxed", out);
      return out.str();
    }
  }
  throw Error(ErrorCode::UnsupportedFormat, "unhandled output format");
}

std::string render_stats(const StatsBundle& bundle, OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      json out;
      if (bundle.train) out["train"] = stats_json(*bundle.train);
      out["eval"] = stats_json(bundle.eval);
      if (bundle.consistency) {
        const ConsistencyProfile& p = *bundle.consistency;
        out["consistency"] = {{"eCon", p.e_con},
                              {"eCon_star", p.e_con_star},
                              {"eLex", p.e_lex},
                              {"eLen", p.e_len},
                              {"rCon", p.r_con},
                              {"rCon_star", p.r_con_star},
                              {"rLex", p.r_lex},
                              {"aCon", p.a_con},
                              {"aLen", p.a_len},
                              {"aDist", p.a_dist},
                              {"vocab_transfer_rate", p.vocab_transfer_rate}};
      }
      if (bundle.overlap) {
        json overlap;
        overlap["ALL"] = overlap_row_json(bundle.overlap->all);
        json per_type = json::object();
        for (const auto& [etype, row] : bundle.overlap->per_type) {
          per_type[etype] = overlap_row_json(row);
        }
        overlap["per_type"] = std::move(per_type);
        out["overlap"] = std::move(overlap);
      }
      return out.dump(2) + "\n";
    }
    case OutputFormat::Markdown: {
      std::ostringstream out;
      out << "# Dataset report\n\n";
      out << "## Global statistics\n\n";
      out << "| corpus | sentences | tokens | mentions | unique | relations |\n";
      out << "|:-------|---:|---:|---:|---:|---:|\n";
      auto stats_row = [&out](const char* name, const DatasetStats& stats) {
        out << "| " << name << " | " << stats.sentences << " | " << stats.tokens
            << " | " << stats.mention_occurrences << " | "
            << stats.unique_mentions << " | " << stats.relations << " |\n";
      };
      if (bundle.train) stats_row("train", *bundle.train);
      stats_row("eval", bundle.eval);
      out << '\n';
      if (bundle.consistency) {
        const ConsistencyProfile& p = *bundle.consistency;
        out << "## Consistency profile\n\n";
        out << "| attribute | value |\n|:----------|------:|\n";
        out << "| eCon | " << pct(p.e_con) << "% |\n";
        out << "| eCon* | " << pct(p.e_con_star) << "% |\n";
        out << "| eLex | " << pct(p.e_lex) << "% |\n";
        out << "| eLen | " << fixed1(p.e_len) << " |\n";
        out << "| rCon | " << pct(p.r_con) << "% |\n";
        out << "| rCon* | " << pct(p.r_con_star) << "% |\n";
        out << "| rLex | " << pct(p.r_lex) << "% |\n";
        out << "| aCon | " << pct(p.a_con) << "% |\n";
        out << "| aLen | " << fixed1(p.a_len) << " |\n";
        out << "| aDist | " << fixed1(p.a_dist) << " |\n";
        out << "| vocabulary transfer rate | " << pct(p.vocab_transfer_rate)
            << "% |\n\n";
      }
      if (bundle.overlap) {
        out << "## Lexical overlap of mention occurrences\n\n";
        out << "| type | EM% | PM% | New% | support |\n";
        out << "|:-----|---:|---:|---:|--------:|\n";
        auto overlap_row = [&out](const std::string& name,
                                  const OverlapRow& row) {
          const long total = row.total();
          auto proportion = [total](long count) {
            return total == 0 ? 0.0
                              : static_cast<double>(count) /
                                    static_cast<double>(total);
          };
          out << "| " << name << " | " << pct(proportion(row.exact)) << " | "
              << pct(proportion(row.partial)) << " | "
              << pct(proportion(row.fresh)) << " | " << total << " |\n";
        };
        for (const auto& [etype, row] : bundle.overlap->per_type) {
          overlap_row(etype, row);
        }
        overlap_row("ALL", bundle.overlap->all);
        out << '\n';
      }
      return out.str();
    }
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "section,key,value\n";
      auto stats_rows = [&out](const char* name, const DatasetStats& stats) {
        out << "global," << name << ".sentences," << stats.sentences << '\n';
        out << "global," << name << ".tokens," << stats.tokens << '\n';
        out << "global," << name << ".mention_occurrences,"
            << stats.mention_occurrences << '\n';
        out << "global," << name << ".unique_mentions," << stats.unique_mentions
            << '\n';
        out << "global," << name << ".relations," << stats.relations << '\n';
      };
      if (bundle.train) stats_rows("train", *bundle.train);
      stats_rows("eval", bundle.eval);
      if (bundle.consistency) {
        const ConsistencyProfile& p = *bundle.consistency;
        out << "consistency,eCon," << pct(p.e_con) << '\n';
        out << "consistency,eCon_star," << pct(p.e_con_star) << '\n';
        out << "consistency,eLex," << pct(p.e_lex) << '\n';
        out << "consistency,eLen," << fixed1(p.e_len) << '\n';
        out << "consistency,rCon," << pct(p.r_con) << '\n';
        out << "consistency,rCon_star," << pct(p.r_con_star) << '\n';
        out << "consistency,rLex," << pct(p.r_lex) << '\n';
        out << "consistency,aCon," << pct(p.a_con) << '\n';
        out << "consistency,aLen," << fixed1(p.a_len) << '\n';
        out << "consistency,aDist," << fixed1(p.a_dist) << '\n';
        out << "consistency,vocab_transfer_rate," << pct(p.vocab_transfer_rate)
            << '\n';
      }
      if (bundle.overlap) {
        auto overlap_rows = [&out](const std::string& name,
                                   const OverlapRow& row) {
          out << "overlap," << name << ".exact," << row.exact << '\n';
          out << "overlap," << name << ".partial," << row.partial << '\n';
          out << "overlap," << name << ".new," << row.fresh << '\n';
        };
        for (const auto& [etype, row] : bundle.overlap->per_type) {
          overlap_rows(etype, row);
        }
        overlap_rows("ALL", bundle.overlap->all);
      }
      return out.str();
    }
  }
  throw Error(ErrorCode::UnsupportedFormat, "unhandled output format");
}

std::string render_swap(const std::vector<SwapReportRow>& rows,
                        OutputFormat format) {
  switch (format) {
    case OutputFormat::Json: {
      json out = json::array();
      for (const SwapReportRow& row : rows) {
        json entry;
        entry["relation"] = row.relation;
        entry["ner"] = prf_json(row.eval.ner);
        entry["re"] = prf_json(row.eval.re);
        entry["revre"] = prf_json(row.eval.revre);
        out.push_back(std::move(entry));
      }
      return out.dump(2) + "\n";
    }
    case OutputFormat::Markdown: {
      std::ostringstream out;
      out << "# Swap report\n\n";
      out << "| relation | NER F1 | RE F1 | revRE F1 |\n";
      out << "|:---------|-------:|------:|---------:|\n";
      for (const SwapReportRow& row : rows) {
        out << "| " << row.relation << " | " << pct(row.eval.ner.f1) << " | "
            << pct(row.eval.re.f1) << " | " << pct(row.eval.revre.f1)
            << " |\n";
      }
      out << '\n';
      return out.str();
    }
    case OutputFormat::Csv: {
      std::ostringstream out;
      out << "relation,ner_f1,re_f1,revre_f1\n";
      for (const SwapReportRow& row : rows) {
        out << row.relation << ',' << pct(row.eval.ner.f1) << ','
            << pct(row.eval.re.f1) << ',' << pct(row.eval.revre.f1) << '\n';
      }
      return out.str();
    }
  }
  throw Error(ErrorCode::UnsupportedFormat, "unhandled output format");
}

std::string render_partition_summary(const PartitionResult& partition) {
  json out;
  json mentions;
  json counts = json::object();
  json proportions = json::object();
  for (MentionNovelty novelty :
       {MentionNovelty::ExactMatch, MentionNovelty::PartialMatch,
        MentionNovelty::New}) {
    auto it = partition.mention_counts.find(novelty);
    counts[to_string(novelty)] = it == partition.mention_counts.end()
                                     ? 0L
                                     : it->second;
    proportions[to_string(novelty)] = partition.mention_proportion(novelty);
  }
  mentions["counts"] = std::move(counts);
  mentions["proportions"] = std::move(proportions);
  mentions["total"] = partition.total_mentions();
  json mention_types = json::object();
  for (const auto& [etype, by_novelty] : partition.mention_counts_by_type) {
    json row = json::object();
    for (MentionNovelty novelty :
         {MentionNovelty::ExactMatch, MentionNovelty::PartialMatch,
          MentionNovelty::New}) {
      auto it = by_novelty.find(novelty);
      row[to_string(novelty)] = it == by_novelty.end() ? 0L : it->second;
    }
    mention_types[etype] = std::move(row);
  }
  mentions["per_type"] = std::move(mention_types);
  out["mentions"] = std::move(mentions);

  json relations;
  json rel_counts = json::object();
  json rel_proportions = json::object();
  for (RelationNovelty novelty :
       {RelationNovelty::ExactMatch, RelationNovelty::PartialMatch,
        RelationNovelty::New}) {
    auto it = partition.relation_counts.find(novelty);
    rel_counts[to_string(novelty)] =
        it == partition.relation_counts.end() ? 0L : it->second;
    rel_proportions[to_string(novelty)] =
        partition.relation_proportion(novelty);
  }
  relations["counts"] = std::move(rel_counts);
  relations["proportions"] = std::move(rel_proportions);
  relations["total"] = partition.total_relations();
  json relation_types = json::object();
  for (const auto& [rtype, by_novelty] : partition.relation_counts_by_type) {
    json row = json::object();
    for (RelationNovelty novelty :
         {RelationNovelty::ExactMatch, RelationNovelty::PartialMatch,
          RelationNovelty::New}) {
      auto it = by_novelty.find(novelty);
      row[to_string(novelty)] = it == by_novelty.end() ? 0L : it->second;
    }
    relation_types[rtype] = std::move(row);
  }
  relations["per_type"] = std::move(relation_types);
  out["relations"] = std::move(relations);
  return out.dump(2) + "\n";
}

std::string render_skip_report(const std::vector<SkipRecord>& skipped) {
  json out = json::array();
  for (const SkipRecord& record : skipped) {
    out.push_back({{"sent_id", record.sent_id}, {"reason", record.reason}});
  }
  return out.dump(2) + "\n";
}

}  // namespace ieval
