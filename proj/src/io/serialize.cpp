// Copyright 2026 The uxrank Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "uxrank/io/serialize.hpp"

#include <fstream>

#include "uxrank/util/strings.hpp"

namespace uxrank::io {
namespace {

template <typename T, typename F>
std::vector<T> read_array(const json& value, const std::string& path, F&& read) {
  std::vector<T> out;
  const auto& array = expect_array(value, path);
  for (std::size_t i = 0; i < array.size(); ++i) out.push_back(read(array[i], index_path(path, i)));
  return out;
}

std::vector<std::string> read_strings(const json& value, const std::string& path) {
  return read_array<std::string>(value, path, expect_string);
}

template <typename T, typename F>
json write_array(const std::vector<T>& items, F&& write) {
  json out = json::array();
  for (const auto& item : items) out.push_back(write(item));
  return out;
}

EvalMethod read_method(const std::string& token, const std::string& path) {
  auto method = method_from_token(token);
  if (!method) throw SchemaError(path, "unknown method '" + token + "'");
  return *method;
}

json to_json(const RaterId& rater) {
  return {{"kind", rater.is_model() ? "model" : "expert"}, {"id", rater.id}};
}

RaterId rater_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  const auto kind = r.string("kind");
  auto id = r.string("id");
  r.finish();
  if (kind == "model") return RaterId::model(std::move(id));
  if (kind == "expert") return RaterId::expert(std::move(id));
  throw SchemaError(r.path_of("kind"), "expected \"model\" or \"expert\"");
}

json to_json(const Persona& p) {
  return {{"id", p.id}, {"name", p.name}, {"role_description", p.role_description}};
}

Persona persona_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  Persona p{r.string("id"), r.optional_string("name").value_or(""), r.string("role_description")};
  r.finish();
  return p;
}

json to_json(const Screenshot& s) {
  json out = {{"id", s.id}, {"path", s.path}, {"media_type", to_token(s.media_type)}};
  if (s.caption) out["caption"] = *s.caption;
  return out;
}

Screenshot screenshot_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  Screenshot s;
  s.id = r.string("id");
  s.path = r.string("path");
  const auto type = r.string("media_type");
  auto media = media_type_from_token(type);
  if (!media) throw SchemaError(r.path_of("media_type"), "expected png, jpeg or webp");
  s.media_type = *media;
  s.caption = r.optional_string("caption");
  r.finish();
  return s;
}

json to_json(const ReportWarning& w) {
  json out = json::object();
  if (w.task_id) out["task_id"] = *w.task_id;
  if (w.screenshot_id) out["screenshot_id"] = *w.screenshot_id;
  if (w.criterion_id) out["criterion_id"] = *w.criterion_id;
  if (w.model_id) out["model_id"] = *w.model_id;
  out["message"] = w.message;
  return out;
}

ReportWarning warning_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  ReportWarning w{r.optional_string("task_id"), r.optional_string("screenshot_id"),
                  r.optional_string("criterion_id"), r.optional_string("model_id"),
                  r.string("message")};
  r.finish();
  return w;
}

json number_or_null(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_number_or_null(ObjectReader& r, const std::string& key) {
  return r.optional_number(key);
}

}  // namespace

json to_json(const Rating& rating) {
  if (rating.is_grade()) return {{"grade", rating.grade_value()}};
  return {{"result", to_token(rating.verdict())}};
}

Rating rating_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  const auto* grade = r.optional("grade");
  const auto* result = r.optional("result");
  r.finish();
  if ((grade == nullptr) == (result == nullptr)) {
    throw SchemaError(path, "rating needs exactly one of \"grade\" or \"result\"");
  }
  if (grade != nullptr) {
    if (!grade->is_number_integer()) throw SchemaError(path + ".grade", "expected integer");
    const auto g = grade->get<long long>();
    if (g < Rating::kMinGrade || g > Rating::kMaxGrade) {
      throw SchemaError(path + ".grade", "grade must lie in 1..5");
    }
    return Rating::grade(static_cast<int>(g));
  }
  const auto token = expect_string(*result, path + ".result");
  const auto verdict = verdict_from_token(token);
  if (!verdict) throw SchemaError(path + ".result", "expected \"passed\" or \"failed\"");
  return Rating::binary(*verdict);
}

json to_json(const Assessment& a) {
  json out = {{"task_id", a.task_id}};
  if (a.screenshot_id) out["screenshot_id"] = *a.screenshot_id;
  out["criterion_id"] = a.criterion_id;
  out["rater"] = to_json(a.rater);
  out["rating"] = to_json(a.rating);
  out["explanation"] = a.explanation;
  if (a.raw_response_id) out["raw_response_id"] = *a.raw_response_id;
  return out;
}

Assessment assessment_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  Assessment a;
  a.task_id = r.string("task_id");
  a.screenshot_id = r.optional_string("screenshot_id");
  a.criterion_id = r.string("criterion_id");
  a.rater = rater_from_json(r.required("rater"), r.path_of("rater"));
  a.rating = rating_from_json(r.required("rating"), r.path_of("rating"));
  a.explanation = r.optional_string("explanation").value_or("");
  a.raw_response_id = r.optional_string("raw_response_id");
  r.finish();
  return a;
}

json to_json(const ModelSpec& m) {
  json out = {{"id", m.id}, {"provider", m.provider}, {"version", m.version}};
  if (m.temperature) out["temperature"] = *m.temperature;
  out["supports_temperature"] = m.supports_temperature;
  out["category"] = m.category;
  return out;
}

ModelSpec model_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  ModelSpec m;
  m.id = r.string("id");
  m.provider = r.string("provider");
  m.version = r.optional_string("version").value_or("");
  m.temperature = r.optional_number("temperature");
  m.supports_temperature =
      r.optional("supports_temperature") == nullptr ? true : r.boolean("supports_temperature");
  m.category = r.optional_string("category").value_or("");
  r.finish();
  return m;
}

json to_json(const Criterion& c) {
  return {{"id", c.id}, {"method", to_token(c.method)}, {"title", c.title},
          {"prompt_text", c.prompt_text}};
}

Criterion criterion_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  Criterion c;
  c.id = r.string("id");
  c.method = read_method(r.string("method"), r.path_of("method"));
  c.title = r.string("title");
  c.prompt_text = r.string("prompt_text");
  r.finish();
  return c;
}

json to_json(const UserTask& t) {
  return {{"id", t.id}, {"title", t.title}, {"description", t.description},
          {"persona_id", t.persona_id}, {"screenshots", t.screenshots}};
}

UserTask task_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  UserTask t;
  t.id = r.string("id");
  t.title = r.optional_string("title").value_or("");
  t.description = r.string("description");
  t.persona_id = r.string("persona_id");
  t.screenshots = read_strings(r.required("screenshots"), r.path_of("screenshots"));
  r.finish();
  return t;
}

json to_json(const gateway::ProviderConfig& c) {
  return {{"key", c.key},
          {"protocol", gateway::to_token(c.protocol)},
          {"endpoint", c.endpoint},
          {"credential_env", c.credential_env},
          {"timeout_ms", c.timeout.count()},
          {"max_retries", c.max_retries},
          {"max_concurrency", c.max_concurrency}};
}

gateway::ProviderConfig provider_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  gateway::ProviderConfig c;
  c.key = r.string("key");
  const auto protocol = r.string("protocol");
  const auto parsed = gateway::protocol_from_token(protocol);
  if (!parsed) throw SchemaError(r.path_of("protocol"), "expected openai-chat or gemini-generate");
  c.protocol = *parsed;
  c.endpoint = r.string("endpoint");
  c.credential_env = r.string("credential_env");
  if (auto t = r.optional_integer("timeout_ms")) c.timeout = std::chrono::milliseconds(*t);
  if (auto n = r.optional_integer("max_retries")) c.max_retries = *n;
  if (auto n = r.optional_integer("max_concurrency")) c.max_concurrency = *n;
  r.finish();
  return c;
}

json to_json(const ProjectFile& file) {
  const auto& p = file.project;
  json out = {
      {"application", {{"name", p.application.name}, {"description", p.application.description}}},
      {"personas", write_array(p.personas, [](const Persona& x) { return to_json(x); })},
      {"screenshots", write_array(p.screenshots, [](const Screenshot& x) { return to_json(x); })},
      {"tasks", write_array(p.tasks, [](const UserTask& x) { return to_json(x); })},
  };
  if (!p.criteria.empty()) out["criteria"] = p.criteria;
  if (!p.custom_criteria.empty()) {
    out["custom_criteria"] = write_array(p.custom_criteria, [](const Criterion& x) { return to_json(x); });
  }
  out["models"] = write_array(p.models, [](const ModelSpec& x) { return to_json(x); });
  if (!file.providers.empty()) {
    out["providers"] =
        write_array(file.providers, [](const gateway::ProviderConfig& x) { return to_json(x); });
  }
  if (file.template_path) out["template"] = *file.template_path;
  return out;
}

ProjectFile project_from_json(const json& value) {
  ObjectReader r(value, "$");
  ProjectFile file;
  auto& p = file.project;
  {
    ObjectReader app(r.required("application"), r.path_of("application"));
    p.application.name = app.optional_string("name").value_or("");
    p.application.description = app.string("description");
    app.finish();
  }
  p.personas = read_array<Persona>(r.required("personas"), r.path_of("personas"), persona_from_json);
  p.screenshots =
      read_array<Screenshot>(r.required("screenshots"), r.path_of("screenshots"), screenshot_from_json);
  p.tasks = read_array<UserTask>(r.required("tasks"), r.path_of("tasks"), task_from_json);
  if (const auto* criteria = r.optional("criteria")) {
    p.criteria = read_strings(*criteria, r.path_of("criteria"));
    if (p.criteria.empty()) throw SchemaError(r.path_of("criteria"), "selection must not be empty");
  }
  if (const auto* custom = r.optional("custom_criteria")) {
    p.custom_criteria = read_array<Criterion>(*custom, r.path_of("custom_criteria"), criterion_from_json);
  }
  p.models = read_array<ModelSpec>(r.required("models"), r.path_of("models"), model_from_json);
  if (const auto* providers = r.optional("providers")) {
    file.providers = read_array<gateway::ProviderConfig>(*providers, r.path_of("providers"),
                                                         provider_from_json);
  }
  file.template_path = r.optional_string("template");
  r.finish();
  return file;
}

json to_json(const EvaluationReport& report) {
  json results = json::array();
  for (const auto& result : report.results) {
    json scores = json::array();
    for (const auto& s : result.scores) {
      scores.push_back({{"task_id", s.task_id}, {"score", s.score}, {"criteria_count", s.criteria_count}});
    }
    json ranking = json::array();
    for (const auto& e : result.ranking.entries) {
      ranking.push_back({{"rank", e.rank}, {"task_id", e.task_id}, {"score", e.score}});
    }
    results.push_back({{"rater", to_json(result.rater)}, {"scores", scores}, {"ranking", ranking}});
  }
  auto assessments = [](const std::vector<Assessment>& items) {
    return write_array(items, [](const Assessment& a) { return to_json(a); });
  };
  return {
      {"format", kReportFormat},
      {"project_digest", report.project_digest},
      {"timestamp", report.timestamp},
      {"method", to_token(report.method)},
      {"template", report.template_name},
      {"models", write_array(report.models, [](const ModelSpec& m) { return to_json(m); })},
      {"manifest",
       {{"tasks", write_array(report.manifest.tasks, [](const UserTask& t) { return to_json(t); })},
        {"criteria",
         write_array(report.manifest.criteria, [](const Criterion& c) { return to_json(c); })}}},
      {"raw_assessments", assessments(report.raw_assessments)},
      {"aggregated_assessments", assessments(report.aggregated_assessments)},
      {"results", results},
      {"warnings", write_array(report.warnings, [](const ReportWarning& w) { return to_json(w); })},
  };
}

EvaluationReport report_from_json(const json& value) {
  ObjectReader r(value, "$");
  if (r.string("format") != kReportFormat) {
    throw SchemaError(r.path_of("format"), "expected \"" + std::string(kReportFormat) + "\"");
  }
  EvaluationReport report;
  report.project_digest = r.string("project_digest");
  report.timestamp = r.string("timestamp");
  report.method = read_method(r.string("method"), r.path_of("method"));
  report.template_name = r.string("template");
  report.models = read_array<ModelSpec>(r.required("models"), r.path_of("models"), model_from_json);
  {
    ObjectReader m(r.required("manifest"), r.path_of("manifest"));
    report.manifest.tasks = read_array<UserTask>(m.required("tasks"), m.path_of("tasks"), task_from_json);
    report.manifest.criteria =
        read_array<Criterion>(m.required("criteria"), m.path_of("criteria"), criterion_from_json);
    m.finish();
  }
  report.raw_assessments = read_array<Assessment>(
      r.required("raw_assessments"), r.path_of("raw_assessments"), assessment_from_json);
  report.aggregated_assessments = read_array<Assessment>(
      r.required("aggregated_assessments"), r.path_of("aggregated_assessments"), assessment_from_json);

  const auto method = report.method;
  report.results = read_array<RaterResult>(
      r.required("results"), r.path_of("results"), [method](const json& v, const std::string& path) {
        ObjectReader rr(v, path);
        RaterResult result;
        result.rater = rater_from_json(rr.required("rater"), rr.path_of("rater"));
        result.scores = read_array<ranking::SeverityScore>(
            rr.required("scores"), rr.path_of("scores"), [method](const json& s, const std::string& p) {
              ObjectReader sr(s, p);
              ranking::SeverityScore score;
              score.task_id = sr.string("task_id");
              score.method = method;
              score.score = sr.optional_number("score").value_or(0.0);
              if (!sr.optional("score")) throw SchemaError(sr.path_of("score"), "required field is missing");
              score.criteria_count = sr.integer("criteria_count");
              sr.finish();
              return score;
            });
        result.ranking.method = method;
        result.ranking.entries = read_array<ranking::RankEntry>(
            rr.required("ranking"), rr.path_of("ranking"), [](const json& e, const std::string& p) {
              ObjectReader er(e, p);
              ranking::RankEntry entry;
              entry.rank = er.integer("rank");
              entry.task_id = er.string("task_id");
              if (!er.optional("score")) throw SchemaError(er.path_of("score"), "required field is missing");
              entry.score = *er.optional_number("score");
              er.finish();
              return entry;
            });
        rr.finish();
        return result;
      });
  report.warnings =
      read_array<ReportWarning>(r.required("warnings"), r.path_of("warnings"), warning_from_json);
  r.finish();
  return report;
}

json to_json(const GroundTruth& truth) {
  return {{"provenance", truth.provenance},
          {"assessments", write_array(truth.assessments, [](const Assessment& a) { return to_json(a); })}};
}

GroundTruth ground_truth_from_json(const json& value) {
  ObjectReader r(value, "$");
  GroundTruth truth;
  truth.provenance = r.optional_string("provenance").value_or("");
  truth.assessments = read_array<Assessment>(r.required("assessments"), r.path_of("assessments"),
                                             assessment_from_json);
  r.finish();
  return truth;
}

json to_json(const TriageDecision& d) {
  json out = {{"task_id", d.task_id}};
  if (d.criterion_id) out["criterion_id"] = *d.criterion_id;
  out["decision"] = to_token(d.decision);
  out["note"] = d.note;
  out["decided_at"] = d.decided_at;
  return out;
}

TriageDecision triage_from_json(const json& value, const std::string& path) {
  ObjectReader r(value, path);
  TriageDecision d;
  d.task_id = r.string("task_id");
  d.criterion_id = r.optional_string("criterion_id");
  const auto token = r.string("decision");
  const auto verdict = triage_verdict_from_token(token);
  if (!verdict) throw SchemaError(r.path_of("decision"), "expected accepted, rejected or deferred");
  d.decision = *verdict;
  d.note = r.optional_string("note").value_or("");
  d.decided_at = r.optional_string("decided_at").value_or("");
  r.finish();
  return d;
}

json to_json(const metrics::AgreementReport& report) {
  json methods = json::array();
  for (auto m : report.methods) methods.push_back(to_token(m));

  json kappa = json::array();
  for (const auto& cell : report.kappa) {
    json row = {{"model", cell.model_id}, {"expert", cell.expert_id}, {"method", to_token(cell.method)}};
    if (!cell.kappa) {
      row["status"] = "no_overlap";
      row["value"] = nullptr;
      row["n_pairs"] = 0;
    } else {
      row["status"] = cell.kappa->defined() ? "ok" : "undefined";
      row["value"] = number_or_null(cell.kappa->value);
      row["n_pairs"] = cell.kappa->n_pairs;
    }
    row["weighted"] = cell.method == EvalMethod::NielsenHeuristics;
    kappa.push_back(std::move(row));
  }
  json kappa_average = json::array();
  for (const auto& s : report.kappa_average) {
    kappa_average.push_back(
        {{"expert", s.expert_id}, {"method", to_token(s.method)}, {"value", number_or_null(s.value)}});
  }
  json topk = json::array();
  for (const auto& c : report.topk) {
    topk.push_back({{"model", c.model_id}, {"expert", c.expert_id}, {"method", to_token(c.method)},
                    {"k", c.k}, {"hit_rate", c.hit_rate}, {"accuracy", c.accuracy},
                    {"n_tasks", c.n_tasks}});
  }
  auto summaries = [](const std::vector<metrics::TopKSummary>& items, bool with_model) {
    json out = json::array();
    for (const auto& s : items) {
      json row = json::object();
      if (with_model) row["model"] = s.model_id;
      row["method"] = to_token(s.method);
      row["k"] = s.k;
      row["hit_rate"] = number_or_null(s.hit_rate);
      row["accuracy"] = number_or_null(s.accuracy);
      out.push_back(std::move(row));
    }
    return out;
  };
  return {{"format", kBenchFormat},
          {"ks", report.ks},
          {"methods", methods},
          {"models", report.models},
          {"experts", report.experts},
          {"kappa", kappa},
          {"kappa_average", kappa_average},
          {"topk", topk},
          {"per_model", summaries(report.per_model, true)},
          {"average", summaries(report.average, false)},
          {"notes", report.notes}};
}

metrics::AgreementReport agreement_from_json(const json& value) {
  ObjectReader r(value, "$");
  if (r.string("format") != kBenchFormat) {
    throw SchemaError(r.path_of("format"), "expected \"" + std::string(kBenchFormat) + "\"");
  }
  metrics::AgreementReport report;
  report.ks = read_array<int>(r.required("ks"), r.path_of("ks"), [](const json& v, const std::string& p) {
    if (!v.is_number_integer()) throw SchemaError(p, "expected integer");
    return v.get<int>();
  });
  for (const auto& token : read_strings(r.required("methods"), r.path_of("methods"))) {
    report.methods.push_back(read_method(token, r.path_of("methods")));
  }
  report.models = read_strings(r.required("models"), r.path_of("models"));
  report.experts = read_strings(r.required("experts"), r.path_of("experts"));
  report.kappa = read_array<metrics::KappaCell>(
      r.required("kappa"), r.path_of("kappa"), [](const json& v, const std::string& p) {
        ObjectReader c(v, p);
        metrics::KappaCell cell;
        cell.model_id = c.string("model");
        cell.expert_id = c.string("expert");
        cell.method = read_method(c.string("method"), c.path_of("method"));
        const auto status = c.string("status");
        const auto number = read_number_or_null(c, "value");
        const auto n = c.integer("n_pairs");
        const auto weighted = c.boolean("weighted");
        c.finish();
        if (status != "no_overlap") cell.kappa = metrics::KappaResult{number, weighted, n};
        return cell;
      });
  report.kappa_average = read_array<metrics::KappaSummary>(
      r.required("kappa_average"), r.path_of("kappa_average"), [](const json& v, const std::string& p) {
        ObjectReader c(v, p);
        metrics::KappaSummary s;
        s.expert_id = c.string("expert");
        s.method = read_method(c.string("method"), c.path_of("method"));
        s.value = read_number_or_null(c, "value");
        c.finish();
        return s;
      });
  report.topk = read_array<metrics::TopKCell>(
      r.required("topk"), r.path_of("topk"), [](const json& v, const std::string& p) {
        ObjectReader c(v, p);
        metrics::TopKCell cell;
        cell.model_id = c.string("model");
        cell.expert_id = c.string("expert");
        cell.method = read_method(c.string("method"), c.path_of("method"));
        cell.k = c.integer("k");
        cell.hit_rate = c.integer("hit_rate");
        cell.accuracy = c.optional_number("accuracy").value_or(0.0);
        cell.n_tasks = c.integer("n_tasks");
        c.finish();
        return cell;
      });
  auto summaries = [](const json& v, const std::string& p, bool with_model) {
    return read_array<metrics::TopKSummary>(v, p, [with_model](const json& item, const std::string& ip) {
      ObjectReader c(item, ip);
      metrics::TopKSummary s;
      if (with_model) s.model_id = c.string("model");
      s.method = read_method(c.string("method"), c.path_of("method"));
      s.k = c.integer("k");
      s.hit_rate = read_number_or_null(c, "hit_rate");
      s.accuracy = read_number_or_null(c, "accuracy");
      c.finish();
      return s;
    });
  };
  report.per_model = summaries(r.required("per_model"), r.path_of("per_model"), true);
  report.average = summaries(r.required("average"), r.path_of("average"), false);
  report.notes = read_strings(r.required("notes"), r.path_of("notes"));
  r.finish();
  return report;
}

std::string dump(const json& value) { return value.dump(2) + "\n"; }

EvaluationReport load_report(const std::filesystem::path& path) {
  return report_from_json(parse_json(util::read_file(path.string()), path.string()));
}

GroundTruth load_ground_truth(const std::filesystem::path& path) {
  return ground_truth_from_json(parse_json(util::read_file(path.string()), path.string()));
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out.flush()) throw std::runtime_error("cannot write " + path.string());
}

// documents.hpp helpers

std::optional<gateway::ProviderConfig> ProjectFile::provider(std::string_view key) const {
  for (const auto& p : providers) {
    if (p.key == key) return p;
  }
  return gateway::builtin_provider(key);
}

std::string describe(const ReportWarning& w) {
  std::vector<std::string> where;
  if (w.model_id) where.push_back("model " + *w.model_id);
  if (w.task_id) where.push_back("task " + *w.task_id);
  if (w.screenshot_id) where.push_back("screenshot " + *w.screenshot_id);
  if (w.criterion_id) where.push_back("criterion " + *w.criterion_id);
  if (where.empty()) return w.message;
  return "[" + util::join(where, ", ") + "] " + w.message;
}

std::string_view to_token(TriageVerdict verdict) {
  switch (verdict) {
    case TriageVerdict::Accepted: return "accepted";
    case TriageVerdict::Rejected: return "rejected";
    case TriageVerdict::Deferred: return "deferred";
  }
  return "deferred";
}

std::optional<TriageVerdict> triage_verdict_from_token(std::string_view token) {
  if (token == "accepted") return TriageVerdict::Accepted;
  if (token == "rejected") return TriageVerdict::Rejected;
  if (token == "deferred") return TriageVerdict::Deferred;
  return std::nullopt;
}

}  // namespace uxrank::io
