// Command-line front end: witness solving and identity suites on a structure file.

#include "plectic/pinfty.hpp"
#include "plectic/random.hpp"
#include "plectic/structure_file.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <future>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

using namespace plectic;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Outcome {
    std::string name;
    std::string status;  // PASS, FAIL, SKIP
    std::size_t terms = 0;
    std::string detail;
};

void print(const Outcome& o, bool machine) {
    if (machine)
        std::cout << o.name << '\t' << o.status << '\t' << o.terms << '\n';
    else {
        std::cout << o.status << "  " << o.name;
        if (o.status == "FAIL") std::cout << "  residual terms: " << o.terms;
        if (!o.detail.empty()) std::cout << "  (" << o.detail << ")";
        std::cout << '\n';
    }
}

Outcome from_report(const std::string& label, const CheckReport& r) {
    Outcome o{label + ": " + r.name, r.passed ? "PASS" : "FAIL", r.residual.term_count(), ""};
    if (!r.notes.empty()) o.detail = r.notes.front();
    return o;
}

StructureFile load(const std::string& path, std::optional<int> bound) {
    StructureFile f;
    try {
        f = load_structure(path);
    } catch (const std::exception& e) {
        throw InputError(e.what());
    }
    if (bound) f.degree_bound = *bound;
    return f;
}

int cmd_solve(const std::string& path, std::optional<int> bound, const std::string& name, const std::string& mode) {
    const StructureFile file = load(path, bound);
    const Cotensor* f = file.find(name);
    if (!f) throw InputError("unknown cotensor '" + name + "'");
    if (mode != "hamilton" && mode != "constraint") throw InputError("mode must be hamilton or constraint");
    const auto S = file.structure();
    SolveReport rep;
    try {
        rep = mode == "hamilton" ? solve_hamilton(S, *f) : solve_constraint(S, *f);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    std::cout << mode << ' ' << name << ": ";
    if (rep.solution)
        std::cout << "witness = " << (rep.solution->is_zero() ? std::string("0") : rep.solution->str()) << '\n';
    else
        std::cout << "no_solution_within_bound (degree bound " << S.degree_bound << ")\n";
    std::cout << "kernel basis size: " << rep.kernel_basis.size() << '\n';
    return 0;
}

// arity of one instance of a suite at level k
int arity_of(const std::string& suite, int k) {
    if (suite == "jacobi") return k;
    if (suite == "leibniz1") return k + 2;
    if (suite == "leibniz2") return k + 4;
    if (suite == "leibniz3") return k + 3;
    if (suite == "rogers") return 2;
    return 0;
}

int default_k(const std::string& suite) {
    if (suite == "jacobi") return 2;
    if (suite == "leibniz2") return 0;
    return 1;
}

void check_k(const std::string& suite, int k) {
    auto bad = [&] { throw InputError("suite " + suite + " is not supported at k=" + std::to_string(k)); };
    if (suite == "jacobi" && (k < 1 || k > 5)) bad();
    if (suite == "leibniz1" && (k < 1 || k > 3)) bad();
    if (suite == "leibniz2" && (k < 0 || k > 1)) bad();
    if (suite == "leibniz3" && (k < 1 || k > 2)) bad();
    if (suite == "pinfty" && (k < 0 || k > 2)) bad();
}

CheckReport run_one(const Homotopy& H, const std::string& suite, int k, const std::vector<PoissonCotensor>& a) {
    if (suite == "jacobi") return H.check_jacobi(k, a);
    if (suite == "leibniz1")
        return H.check_leibniz_first(k, std::vector<PoissonCotensor>(a.begin(), a.begin() + k), a[static_cast<std::size_t>(k)],
                                     a[static_cast<std::size_t>(k + 1)]);
    if (suite == "leibniz2") return H.check_leibniz_second(k, a);
    if (suite == "leibniz3") return H.check_leibniz_third(k, a);
    return H.rogers_relation(a[0], a[1]);
}

std::vector<std::vector<int>> pinfty_profiles(int k) {
    std::vector<std::vector<int>> out;
    if (k == 0 || k == 1) out.insert(out.end(), {{1}, {2}, {3}});
    if (k == 0 || k == 2) out.insert(out.end(), {{1, 1}, {1, 2}, {1, 3}, {2, 2}});
    return out;
}

int cmd_verify(const std::string& path, std::optional<int> bound, std::string suite, std::optional<int> k_opt,
               unsigned long long seed, int trials, bool machine) {
    static const std::vector<std::string> all{"jacobi", "leibniz1", "leibniz2", "leibniz3", "rogers", "pinfty"};
    std::vector<std::string> suites;
    if (suite == "all")
        suites = all;
    else if (std::find(all.begin(), all.end(), suite) != all.end())
        suites = {suite};
    else
        throw InputError("unknown suite '" + suite + "'");
    if (trials < 0) throw InputError("trials must be non-negative");
    for (const auto& s : suites) check_k(s, k_opt.value_or(s == "pinfty" ? 0 : default_k(s)));

    const StructureFile file = load(path, bound);
    NPlecticStructure S;
    try {
        S = file.structure();
        if (!verify_cocycle(S)) throw InputError("omega is not closed");
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    Homotopy H(S);
    const auto t0 = std::chrono::steady_clock::now();

    std::vector<Outcome> outcomes;
    std::vector<PoissonCotensor> named;
    std::vector<std::string> named_labels;
    for (const auto& [name, f] : file.cotensors) {
        try {
            named.push_back(make_poisson(S, f));
            named_labels.push_back(name);
        } catch (const NotPoissonWithinBound& e) {
            outcomes.push_back({"input " + name, "SKIP", 0, e.what()});
        }
    }

    std::mt19937_64 rng(seed);
    auto draw = [&](int count) {
        std::vector<PoissonCotensor> v;
        for (int i = 0; i < count; ++i) v.push_back(random_poisson(S, rng));
        return v;
    };

    struct Job {
        std::string label;
        std::function<std::vector<Outcome>()> run;
    };
    std::vector<Job> jobs;

    for (const auto& s : suites) {
        const int k = k_opt.value_or(s == "pinfty" ? 0 : default_k(s));
        const int ar = s == "pinfty" ? 0 : arity_of(s, k);
        std::vector<std::pair<std::string, std::vector<PoissonCotensor>>> instances;
        if (s != "pinfty" && !named.empty()) {
            std::vector<PoissonCotensor> a;
            std::string lab = "named";
            for (int i = 0; i < ar; ++i) {
                a.push_back(named[static_cast<std::size_t>(i) % named.size()]);
                lab += (i ? "," : " ") + named_labels[static_cast<std::size_t>(i) % named.size()];
            }
            instances.emplace_back(lab, a);
        }
        bool vacuous = false;
        for (int t = 0; t < trials; ++t) {
            try {
                if (s == "pinfty")
                    instances.emplace_back("trial " + std::to_string(t + 1), draw(6));
                else
                    instances.emplace_back("trial " + std::to_string(t + 1), draw(ar));
            } catch (const std::runtime_error&) {
                vacuous = true;  // no nonzero Poisson cotensors to draw from
                break;
            }
        }
        if (vacuous && instances.empty()) {
            outcomes.push_back({s + ": no Poisson inputs", "PASS", 0, "vacuous"});
            continue;
        }
        for (auto& [lab, args] : instances) {
            const std::string label = s + " " + lab;
            if (s == "pinfty") {
                jobs.push_back({label, [&H, label, args, k] {
                                    std::vector<Outcome> out;
                                    auto fam = build_structure_maps(H);
                                    for (const auto& prof : pinfty_profiles(k)) {
                                        std::vector<WordBlock> blocks;
                                        std::size_t used = 0;
                                        for (int len : prof) {
                                            WordBlock b;
                                            for (int i = 0; i < len; ++i) b.factors.push_back(make_letter(args[used++]));
                                            blocks.push_back(std::move(b));
                                        }
                                        out.push_back(from_report(label, check_structure_equation(fam, blocks)));
                                    }
                                    return out;
                                }});
            } else {
                jobs.push_back({label, [&H, label, s, k, args] {
                                    return std::vector<Outcome>{from_report(label, run_one(H, s, k, args))};
                                }});
            }
        }
    }

    std::vector<std::future<std::vector<Outcome>>> futures;
    for (auto& j : jobs) futures.push_back(std::async(std::launch::async, j.run));
    for (auto& f : futures)
        for (auto& o : f.get()) outcomes.push_back(std::move(o));

    bool failed = false;
    for (const auto& o : outcomes) {
        print(o, machine);
        failed = failed || o.status == "FAIL";
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
    std::cerr << outcomes.size() << " checks in " << ms << " ms\n";
    return failed ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"n-plectic Poisson cotensor toolkit"};
    app.require_subcommand(1);
    std::string structure = "structure.txt";
    std::optional<int> bound;
    app.add_option("--structure", structure, "structure file")->check(CLI::ExistingFile);
    app.add_option("--degree-bound", bound, "override the file's witness degree bound");

    auto* solve = app.add_subcommand("solve", "solve for a Hamilton or constraint witness");
    std::string name, mode;
    solve->add_option("name", name, "cotensor name")->required();
    solve->add_option("mode", mode, "hamilton | constraint")->required();

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    std::string suite;
    std::optional<int> k;
    unsigned long long seed = 1;
    int trials = 5;
    bool machine = false;
    verify->add_option("suite", suite, "jacobi | leibniz1 | leibniz2 | leibniz3 | rogers | pinfty | all")->required();
    verify->add_option("--k", k, "level of the identity");
    verify->add_option("--seed", seed, "random seed");
    verify->add_option("--trials", trials, "random instances");
    verify->add_flag("--machine", machine, "one tab-separated line per check");

    // flags are accepted before or after the subcommand
    for (auto* sub : {solve, verify}) {
        sub->add_option("--structure", structure, "structure file")->check(CLI::ExistingFile);
        sub->add_option("--degree-bound", bound, "override the file's witness degree bound");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitInput;
    }

    try {
        if (*solve) return cmd_solve(structure, bound, name, mode);
        return cmd_verify(structure, bound, suite, k, seed, trials, machine);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
}
