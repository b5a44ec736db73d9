#include "eigproj/analysis.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <exception>
#include <mutex>
#include <thread>

#include "eigproj/error.hpp"

namespace eigproj {

AnalysisReport analyze(const CategoryPtr& cat, const std::vector<std::uint32_t>& fields,
                       const AnalyzeOptions& options, const std::optional<FinitePoset>& poset) {
  auto start = std::chrono::steady_clock::now();
  AnalysisReport r;
  r.digest = category_digest(*cat);
  r.violations = validate(*cat);
  r.valid = r.violations.empty();
  if (r.valid) {
    r.ei = is_ei(*cat);
    r.skeletal = is_skeletal(*cat);
    if (auto f = first_non_mono(*cat)) r.non_mono = cat->morphism_name(*f);
    r.all_mono = !r.non_mono;
  }
  if (r.valid && *r.ei && *r.skeletal) {
    FreenessResult fr = is_free(*cat);
    r.free = fr.free;
    r.freeness_counterexample = fr.counterexample;
    if (poset) r.poset = poset_gpt(*poset);
    for (std::uint32_t p : fields) {
      FieldSpec k(p);
      FieldAnalysis fa;
      fa.p = p;
      CategoryProjectivity cp = is_category_projective(*cat, k);
      fa.projective = cp.projective;
      fa.witness = cp.witness;
      if (fa.projective) {
        fa.gpt.push_back(gpt_closed(cat, k, {options.audit, true}));
        fa.gpt.push_back(gpt_closed_via_mono(*cat, k));
      }
      r.fields.push_back(std::move(fa));
    }
  }
  if (options.timing) {
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
  return r;
}

namespace {

template <class T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const AnalysisReport& r, const FiniteCategory& cat) {
  Json j;
  j["digest"] = r.digest;
  j["valid"] = r.valid;
  if (!r.valid) j["violations"] = to_json(r.violations);
  j["flags"] = {{"ei", optional_json(r.ei)},
                {"skeletal", optional_json(r.skeletal)},
                {"free", optional_json(r.free)},
                {"all_mono", optional_json(r.all_mono)}};
  Json witnesses = Json::object();
  if (r.non_mono) witnesses["non_mono"] = *r.non_mono;
  if (r.freeness_counterexample) {
    const auto& c = *r.freeness_counterexample;
    Json pre = Json::array();
    for (auto [u, b] : c.preimages) pre.push_back({cat.morphism_name(u), cat.morphism_name(b)});
    witnesses["not_free"] = {{"t", c.t}, {"q", c.q}, {"morphism", cat.morphism_name(c.morphism)}, {"preimages", pre}};
  }
  j["witnesses"] = std::move(witnesses);
  Json fields = Json::array();
  for (const auto& fa : r.fields) {
    Json f;
    f["p"] = fa.p;
    f["projective"] = fa.projective;
    f["gorenstein"] = fa.projective;
    if (fa.witness) {
      f["witness"] = {{"i", fa.witness->i}, {"j", fa.witness->j}, {"side", to_string(fa.witness->side)}};
    }
    if (fa.projective) {
      Json gpt = Json::array();
      for (const auto& v : fa.gpt) gpt.push_back(to_json(v));
      if (r.poset) gpt.push_back(to_json(*r.poset));
      f["gpt"] = std::move(gpt);
    } else {
      f["gpt"] = "inapplicable";
    }
    fields.push_back(std::move(f));
  }
  j["fields"] = std::move(fields);
  if (r.seconds) j["seconds"] = *r.seconds;
  return j;
}

void run_ordered(std::size_t count, std::size_t jobs, const std::function<std::string(std::size_t)>& task,
                 const std::function<void(std::size_t, std::string&&)>& sink) {
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) sink(i, task(i));
    return;
  }
  struct Slot {
    bool ready = false;
    std::string value;
    std::exception_ptr error;
  };
  std::vector<Slot> slots(count);
  std::mutex mu;
  std::condition_variable cv;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (std::size_t i; !stop && (i = next++) < count;) {
      Slot s;
      try {
        s.value = task(i);
      } catch (...) {
        s.error = std::current_exception();
      }
      s.ready = true;
      {
        std::lock_guard lock(mu);
        slots[i] = std::move(s);
      }
      cv.notify_all();
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(jobs, count); ++t) pool.emplace_back(worker);
  std::exception_ptr failure;
  for (std::size_t i = 0; i < count && !failure; ++i) {
    std::unique_lock lock(mu);
    cv.wait(lock, [&] { return slots[i].ready; });
    Slot s = std::move(slots[i]);
    lock.unlock();
    if (s.error) {
      failure = s.error;
      stop = true;
    } else {
      sink(i, std::move(s.value));
    }
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

namespace {

struct Tally {
  std::atomic<std::size_t> disagreements{0};
  std::atomic<std::size_t> findings{0};
};

bool field_dependent(const std::vector<GptOutcome>& outcomes) {
  for (auto o : outcomes)
    if (o != outcomes.front()) return true;
  return false;
}

}  // namespace

SweepSummary sweep_posets(std::size_t n, const SweepOptions& options, std::ostream& out) {
  std::vector<FinitePoset> posets = enumerate_posets(n);
  Tally tally;
  auto task = [&](std::size_t i) {
    const FinitePoset& p = posets[i];
    auto cat = std::make_shared<const FiniteCategory>(poset_to_category(p));
    Json line;
    line["instance"] = i;
    line["poset"] = poset_to_json(p);
    line["free"] = is_free(*cat).free;
    GptVerdict combinatorial = poset_gpt(p);
    Json verdicts = Json::array();
    verdicts.push_back(to_json(combinatorial));
    bool agree = true;
    std::vector<GptOutcome> per_field;
    for (std::uint32_t q : options.fields) {
      FieldSpec k(q);
      GptVerdict column = gpt_closed(cat, k, {options.audit, true});
      GptVerdict mono = gpt_closed_via_mono(*cat, k);
      per_field.push_back(column.outcome);
      if (column.outcome != combinatorial.outcome || !column.consistency.empty()) agree = false;
      if (mono.outcome != GptOutcome::Abstain && mono.outcome != column.outcome) agree = false;
      verdicts.push_back(to_json(column));
      verdicts.push_back(to_json(mono));
    }
    line["verdicts"] = std::move(verdicts);
    line["agree"] = agree;
    if (!agree) ++tally.disagreements;
    if (!per_field.empty() && field_dependent(per_field)) {
      line["field_dependent"] = true;
      ++tally.findings;
    }
    return line.dump();
  };
  run_ordered(posets.size(), options.jobs, task, [&](std::size_t, std::string&& s) { out << s << "\n"; });
  return {posets.size(), tally.disagreements, tally.findings};
}

SweepSummary sweep_seeds(std::size_t count, const SweepOptions& options, std::ostream& out) {
  Tally tally;
  auto task = [&](std::size_t seed) {
    FreeEISpec spec = random_spec(seed, options.bounds);
    auto cat = std::make_shared<const FiniteCategory>(generate_category(spec));
    Json line;
    line["seed"] = seed;
    line["digest"] = category_digest(*cat);
    line["objects"] = cat->object_count();
    line["morphisms"] = cat->morphism_count();
    bool structural = validate(*cat).empty() && is_ei(*cat) && is_skeletal(*cat) && is_free(*cat).free;
    line["valid_free"] = structural;
    line["all_mono"] = all_mono(*cat);
    bool agree = structural;
    std::vector<GptOutcome> per_field;
    Json fields = Json::array();
    for (std::uint32_t q : options.fields) {
      FieldSpec k(q);
      Json f;
      f["p"] = q;
      bool projective = is_gorenstein(*cat, k);
      f["projective"] = projective;
      if (projective) {
        GptVerdict column = gpt_closed(cat, k, {options.audit, true});
        GptVerdict mono = gpt_closed_via_mono(*cat, k);
        per_field.push_back(column.outcome);
        if (!column.consistency.empty()) agree = false;
        if (mono.outcome != GptOutcome::Abstain && mono.outcome != column.outcome) agree = false;
        f["verdicts"] = {to_json(column), to_json(mono)};
      } else {
        f["verdicts"] = "inapplicable";
      }
      fields.push_back(std::move(f));
    }
    line["fields"] = std::move(fields);
    line["agree"] = agree;
    if (!agree) ++tally.disagreements;
    if (!per_field.empty() && field_dependent(per_field)) {
      line["field_dependent"] = true;
      ++tally.findings;
    }
    return line.dump();
  };
  run_ordered(count, options.jobs, task, [&](std::size_t, std::string&& s) { out << s << "\n"; });
  return {count, tally.disagreements, tally.findings};
}

}  // namespace eigproj
