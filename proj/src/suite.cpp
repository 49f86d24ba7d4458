#include "ffperm/suite.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <ostream>
#include <thread>

#include "ffperm/criteria.hpp"
#include "ffperm/rng.hpp"
#include "ffperm/sets.hpp"
#include "ffperm/verify.hpp"

namespace ffperm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct GridPoint {
    const Field* field;
    FamilySpec spec;
};

std::vector<unsigned> exponent_range(const GridConfig& cfg, unsigned k) {
    const unsigned hi = cfg.exp_max.value_or(3 * k);
    std::vector<unsigned> out;
    for (unsigned e = cfg.exp_min; e < hi; ++e) out.push_back(e);
    return out;
}

template <class T>
std::string csv_cell(const std::optional<T>& v) {
    return v ? std::to_string(*v) : std::string();
}

}  // namespace

bool empirical_verdict(const Field& f3, const FamilySpec& spec) {
    const FamilyEvaluator f(f3, spec);
    switch (family_traits(spec.id).domain) {
        case Domain::Field: return is_permutation(f3, f);
        case Domain::Gamma: return is_permutation_on(f3, f, gamma_set(f3, spec.k));
        case Domain::Cosets: return injective_on_cosets(f3, f, spec.k);
    }
    return false;
}

VerificationRecord check_instance(const Field& f3, const FamilySpec& spec, bool timing) {
    const auto start = Clock::now();
    VerificationRecord rec;
    rec.family = spec.id;
    rec.p = spec.p;
    rec.k = spec.k;
    const FamilyTraits t = family_traits(spec.id);
    if (t.uses_l) rec.l = spec.l;
    if (t.uses_m) rec.m = spec.m;
    if (t.uses_n) rec.n = spec.n;
    if (t.coef != CoefDomain::None && spec.c) rec.c_index = spec.c->v;
    rec.predicted = predict(f3, spec);
    rec.empirical = empirical_verdict(f3, spec);
    if (timing) rec.elapsed_ms = ms_since(start);
    return rec;
}

std::optional<CoefPolicy> parse_coef_policy(const std::string& name) {
    if (name == "default") return CoefPolicy::Default;
    if (name == "all") return CoefPolicy::AllField;
    if (name == "subfield-star") return CoefPolicy::SubfieldStar;
    if (name == "fixed") return CoefPolicy::Fixed;
    if (name == "one") return CoefPolicy::One;
    return std::nullopt;
}

std::vector<Elem> coefficient_choices(const Field& f3, unsigned k, FamilyId family, const GridConfig& cfg) {
    const CoefDomain domain = family_traits(family).coef;
    if (domain == CoefDomain::None) return {};
    CoefPolicy policy = cfg.c_policy;
    if (policy == CoefPolicy::Default) {
        policy = domain == CoefDomain::SubfieldStar ? CoefPolicy::SubfieldStar : CoefPolicy::AllField;
    }
    switch (policy) {
        case CoefPolicy::One: return {f3.one()};
        case CoefPolicy::Fixed:
            if (!cfg.c_index) throw SpecError("c policy 'fixed' needs a c index");
            return {f3.from_index(*cfg.c_index)};
        case CoefPolicy::SubfieldStar: {
            std::vector<Elem> out;
            for (Elem e : subfield_set(f3, k)) {
                if (!e.is_zero()) out.push_back(e);
            }
            return out;
        }
        case CoefPolicy::AllField: {
            if (domain != CoefDomain::Full) {
                throw SpecError(std::string(family_name(family)) + " takes c from F_q^* only");
            }
            std::vector<Elem> out;
            if (f3.size() <= cfg.c_sample_cap) {
                for (Index i = 0; i < f3.size(); ++i) out.emplace_back(i);
                return out;
            }
            // Seeded sample that always holds a nonzero trace-zero element
            // and a trace-nonzero element.
            std::vector<bool> taken(f3.size(), false);
            std::optional<Elem> zero_class, nonzero_class;
            for (Index i = 1; i < f3.size() && (!zero_class || !nonzero_class); ++i) {
                const bool tz = f3.trace_rel(Elem(i), k).is_zero();
                if (tz && !zero_class) zero_class = Elem(i);
                if (!tz && !nonzero_class) nonzero_class = Elem(i);
            }
            for (const auto& e : {zero_class, nonzero_class}) {
                if (e && out.size() < cfg.c_sample_cap) {
                    out.push_back(*e);
                    taken[e->v] = true;
                }
            }
            SplitMix64 rng(cfg.c_seed ^ (std::uint64_t{f3.characteristic()} << 32) ^ k);
            while (out.size() < cfg.c_sample_cap) {
                const Index i = static_cast<Index>(rng.below(f3.size()));
                if (taken[i]) continue;
                taken[i] = true;
                out.emplace_back(i);
            }
            std::sort(out.begin(), out.end());
            return out;
        }
        case CoefPolicy::Default: break;
    }
    return {};
}

SuiteResult run_suite(const GridConfig& cfg) {
    if (cfg.primes.empty()) throw SpecError("suite needs at least one prime");
    if (cfg.k_min < 1 || cfg.k_max < cfg.k_min) throw SpecError("suite needs 1 <= k_min <= k_max");
    if (cfg.jobs < 1) throw SpecError("suite needs at least one job");
    if (cfg.c_sample_cap < 2) throw SpecError("c sample cap must be at least 2");

    const auto start = Clock::now();
    const FamilyTraits traits = family_traits(cfg.family);
    std::vector<unsigned> primes = cfg.primes;
    std::sort(primes.begin(), primes.end());
    primes.erase(std::unique(primes.begin(), primes.end()), primes.end());

    SuiteResult result;
    std::vector<std::unique_ptr<Field>> fields;
    std::vector<GridPoint> points;
    const std::vector<unsigned> unused{0};

    for (unsigned p : primes) {
        if (!is_prime(p)) throw SpecError(std::to_string(p) + " is not prime");
        for (unsigned k = cfg.k_min; k <= cfg.k_max; ++k) {
            std::uint64_t size = 1;
            bool too_big = false;
            for (unsigned i = 0; i < 3 * k && !too_big; ++i) {
                size *= p;
                too_big = size > cfg.field_cap;
            }
            if (too_big) {
                result.summary.skipped.emplace_back(p, k);
                continue;
            }
            fields.push_back(std::make_unique<Field>(Field::build(p, 3 * k, cfg.limits)));
            const Field* f3 = fields.back().get();
            const std::vector<unsigned> exps = exponent_range(cfg, k);
            if (exps.empty() && (traits.uses_l || traits.uses_m || traits.uses_n)) {
                throw SpecError("empty exponent range");
            }
            const std::vector<Elem> cs = coefficient_choices(*f3, k, cfg.family, cfg);
            const std::vector<std::optional<Elem>> c_opts = [&] {
                std::vector<std::optional<Elem>> v;
                if (cs.empty()) v.emplace_back();
                for (Elem c : cs) v.emplace_back(c);
                return v;
            }();

            for (unsigned l : traits.uses_l ? exps : unused) {
                for (unsigned m : traits.uses_m ? exps : unused) {
                    for (unsigned n : traits.uses_n ? exps : unused) {
                        for (const auto& c : c_opts) {
                            FamilySpec spec{cfg.family, p, k, std::nullopt, std::nullopt, std::nullopt, c};
                            if (traits.uses_l) spec.l = l;
                            if (traits.uses_m) spec.m = m;
                            if (traits.uses_n) spec.n = n;
                            validate(*f3, spec);
                            points.push_back({f3, spec});
                        }
                    }
                }
            }
        }
    }

    std::vector<std::optional<VerificationRecord>> slots(points.size());
    std::atomic<std::size_t> next{0};
    std::atomic<bool> out_of_time{false};
    const auto worker = [&] {
        for (;;) {
            if (cfg.time_budget_s > 0 && ms_since(start) > cfg.time_budget_s * 1000.0) {
                out_of_time = true;
                return;
            }
            const std::size_t i = next.fetch_add(1);
            if (i >= points.size()) return;
            slots[i] = check_instance(*points[i].field, points[i].spec, cfg.timing);
        }
    };
    if (cfg.jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < cfg.jobs; ++j) pool.emplace_back(worker);
    }

    for (auto& slot : slots) {
        if (!slot) {
            result.summary.complete = false;
            continue;
        }
        ++result.summary.points;
        if (slot->match()) {
            ++result.summary.matches;
        } else {
            ++result.summary.mismatches;
        }
        result.records.push_back(std::move(*slot));
    }
    result.summary.elapsed_s = ms_since(start) / 1000.0;
    return result;
}

nlohmann::ordered_json to_json(const VerificationRecord& r) {
    nlohmann::ordered_json j;
    const auto opt = [](const auto& v) { return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr); };
    j["family"] = std::string(family_name(r.family));
    j["p"] = r.p;
    j["k"] = r.k;
    j["l"] = opt(r.l);
    j["m"] = opt(r.m);
    j["n"] = opt(r.n);
    j["c_index"] = opt(r.c_index);
    j["empirical"] = r.empirical;
    j["predicted"] = r.predicted;
    j["match"] = r.match();
    j["elapsed_ms"] = opt(r.elapsed_ms);
    return j;
}

nlohmann::ordered_json to_json(const SuiteSummary& s) {
    nlohmann::ordered_json j;
    j["points"] = s.points;
    j["matches"] = s.matches;
    j["mismatches"] = s.mismatches;
    j["complete"] = s.complete;
    auto skipped = nlohmann::ordered_json::array();
    for (const auto& [p, k] : s.skipped) skipped.push_back({{"p", p}, {"k", k}});
    j["skipped"] = skipped;
    j["elapsed_s"] = s.elapsed_s;
    j["ok"] = s.ok();
    return j;
}

std::string csv_header() { return "family,p,k,l,m,n,c_index,empirical,predicted,match,elapsed_ms"; }

std::string to_csv(const VerificationRecord& r) {
    const auto b = [](bool v) { return v ? "true" : "false"; };
    std::string elapsed;
    if (r.elapsed_ms) elapsed = nlohmann::json(*r.elapsed_ms).dump();
    return std::string(family_name(r.family)) + "," + std::to_string(r.p) + "," + std::to_string(r.k) + "," +
           csv_cell(r.l) + "," + csv_cell(r.m) + "," + csv_cell(r.n) + "," + csv_cell(r.c_index) + "," +
           b(r.empirical) + "," + b(r.predicted) + "," + b(r.match()) + "," + elapsed;
}

void write_jsonl(std::ostream& out, const std::vector<VerificationRecord>& records) {
    for (const auto& r : records) out << to_json(r).dump() << '\n';
}

void write_csv(std::ostream& out, const std::vector<VerificationRecord>& records) {
    out << csv_header() << '\n';
    for (const auto& r : records) out << to_csv(r) << '\n';
}

}  // namespace ffperm
