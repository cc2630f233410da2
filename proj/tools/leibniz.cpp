// Command-line front end: validate, cohomology, deform check, deform lift.
// Exit codes: 0 success (a failed lift is a finding, still 0), 1 domain
// failure, 2 usage or parse error.

#include "leibniz/algebra.hpp"
#include "leibniz/bicomplex.hpp"
#include "leibniz/cohomology.hpp"
#include "leibniz/deformation.hpp"
#include "leibniz/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

using namespace leibniz;
using io::json;

namespace {

struct DomainFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string witness_str(const std::vector<std::size_t>& w, const std::vector<std::string>* labels)
{
    std::string s = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        s += i ? ", " : "";
        s += labels && w[i] < labels->size() ? (*labels)[w[i]] : std::to_string(w[i]);
    }
    return s + ")";
}

void print_report(const std::string& name, const std::string& what, const ValidationReport& r,
                  const std::vector<std::string>* labels = nullptr)
{
    if (r.ok()) {
        std::cout << name << " (" << what << "): ok\n";
        return;
    }
    std::cout << name << " (" << what << "): " << r.violations.size() << " violation(s)\n";
    std::size_t shown = 0;
    for (const auto& v : r.violations) {
        if (++shown > 20) {
            std::cout << "  ...\n";
            break;
        }
        std::cout << "  " << v.axiom;
        if (!v.witness.empty())
            std::cout << " at " << witness_str(v.witness, labels) << ": " << format(v.left) << " != " << format(v.right);
        std::cout << "\n";
    }
}

ValidationReport validate_jet(const DeformationJet& jet, std::ostream* out)
{
    ValidationReport r;
    for (int n = 1; n <= jet.order; ++n) {
        const auto d = defects(jet, n);
        if (!d.clean())
            r.add("axiom defect at order " + std::to_string(n), {}, {}, {});
        if (out)
            *out << "  order " << n << ": " << (d.clean() ? "clean" : "defect") << "\n";
    }
    return r;
}

int cmd_validate(const std::string& path)
{
    const auto doc = io::load_document(path);
    bool ok = true;
    for (const auto& [name, type] : doc.names) {
        ValidationReport r;
        const std::vector<std::string>* labels = nullptr;
        if (type == "algebra") {
            const auto& A = doc.algebras.at(name);
            r = A.kind == AlgebraKind::associative ? validate_associative(A) : validate_lie(A);
            labels = &A.basis_labels;
            print_report(name, std::string(to_string(A.kind)) + " algebra", r, labels);
        } else if (type == "pair") {
            const auto& e = doc.pairs.at(name);
            r = validate_pair(e.pair);
            print_report(name, "pair", r);
            if (e.a_action) {
                const auto rr = validate_rinehart(e.pair, *e.a_action);
                print_report(name, "Rinehart pair", rr);
                r.merge(rr);
            }
        } else if (type == "poisson") {
            const auto& P = doc.poissons.at(name).poisson;
            r = validate_poisson(P);
            print_report(name, "poisson algebra", r, &P.A.basis_labels);
        } else if (type == "module") {
            const auto& e = doc.modules.at(name);
            r = validate_module(doc.pairs.at(e.pair).pair, e.module);
            print_report(name, "module", r);
        } else if (type == "poisson_module") {
            const auto& e = doc.poisson_modules.at(name);
            r = validate_poisson_module(doc.poissons.at(e.poisson).poisson, e.module);
            print_report(name, "poisson module", r);
        } else if (type == "jet") {
            r = validate_jet(doc.jets.at(name).jet, nullptr);
            print_report(name, "jet", r);
        } else {
            std::cout << name << " (equivalence): ok\n";
        }
        ok = ok && r.ok();
    }
    return ok ? 0 : 1;
}

struct Target {
    Bicomplex bc;
    std::optional<bool> semisimple;
};

Target make_target(const io::Document& doc, const std::string& name, const std::string& module,
                   const std::string& branch_flag)
{
    const auto type = doc.type_of(name);
    if (!type || (*type != "pair" && *type != "poisson"))
        throw io::ParseError("--pair", "no pair or poisson object named \"" + name + "\"");
    const bool is_poisson = *type == "poisson";
    const std::string branch = branch_flag.empty() ? (is_poisson ? "poisson" : "leibniz") : branch_flag;

    if (branch == "poisson") {
        if (!is_poisson)
            throw DomainFailure("the poisson branch needs a poisson object; \"" + name + "\" is a pair");
        const auto& P = doc.poissons.at(name).poisson;
        auto r = validate_poisson(P);
        r.merge(validate_associative(P.A));
        PoissonModule mod = self_module(P);
        if (!module.empty()) {
            auto it = doc.poisson_modules.find(module);
            if (it == doc.poisson_modules.end() || it->second.poisson != name)
                throw io::ParseError("--module", "no poisson module \"" + module + "\" over \"" + name + "\"");
            mod = it->second.module;
            r.merge(validate_poisson_module(P, mod));
        }
        if (!r.ok()) {
            print_report(name, "input", r);
            throw DomainFailure("input does not validate");
        }
        return {Bicomplex::poisson(P, mod), std::nullopt};
    }

    LeibnizPair pair;
    std::optional<bool> semisimple;
    if (is_poisson) {
        pair = doc.poissons.at(name).poisson.as_pair();
    } else {
        pair = doc.pairs.at(name).pair;
        semisimple = doc.pairs.at(name).semisimple;
    }
    auto r = validate_pair(pair);
    r.merge(validate_associative(pair.A));
    r.merge(validate_lie(pair.L));
    PairModule mod = self_module(pair);
    if (!module.empty()) {
        auto it = doc.modules.find(module);
        if (it == doc.modules.end() || it->second.pair != name)
            throw io::ParseError("--module", "no module \"" + module + "\" over \"" + name + "\"");
        mod = it->second.module;
    }
    r.merge(validate_module(pair, mod));
    if (!r.ok()) {
        print_report(name, "input", r);
        throw DomainFailure("input does not validate");
    }
    return {Bicomplex::leibniz(pair, mod), semisimple};
}

json cochain_json(const TotalCochain& c, const Bicomplex& bc)
{
    json parts = json::array();
    for (const auto& b : c.layout.blocks) {
        if (b.size == 0)
            continue;
        const auto v = c.part(b.degree);
        if (is_zero(v))
            continue;
        json entries = json::array();
        const auto sp = bc.space(b.degree);
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (sgn(v[i]) == 0)
                continue;
            const auto co = sp.coord(i);
            entries.push_back(json{{"a", co.a}, {"w", sp.wedges().unrank(co.wedge_rank)}, {"t", co.target},
                                   {"value", to_string(v[i])}});
        }
        parts.push_back(json{{"p", b.degree.p}, {"q", b.degree.q}, {"entries", entries}});
    }
    return parts;
}

int cmd_cohomology(const std::string& path, const std::string& pair, const std::string& module, int max_degree,
                   const std::string& branch, bool reps, bool as_json, bool whitehead)
{
    const auto doc = io::load_document(path);
    const auto target = make_target(doc, pair, module, branch);
    const auto& bc = target.bc;
    const auto table = total_cohomology(bc, max_degree, reps);

    if (as_json) {
        json out = json::array();
        for (const auto& e : table.degrees) {
            json rec{{"degree", e.degree}, {"dim", e.dim}};
            if (reps) {
                json rs = json::array();
                for (const auto& c : table.representatives.at(e.degree))
                    rs.push_back(cochain_json(c, bc));
                rec["representatives"] = rs;
            }
            out.push_back(rec);
        }
        json doc_out{{"branch", to_string(bc.branch())}, {"cohomology", out}};
        if (whitehead) {
            const auto w = whitehead_compare(bc, target.semisimple.value_or(false));
            doc_out["whitehead"] = json{{"total", w.total}, {"column", w.column}, {"match", w.match},
                                        {"note", w.note()}};
        }
        std::cout << doc_out.dump(2) << "\n";
        return 0;
    }

    std::cout << "branch: " << to_string(bc.branch()) << "\n";
    std::cout << "n  dim H^n\n";
    for (const auto& e : table.degrees) {
        std::cout << e.degree << "  " << e.dim << "\n";
        if (reps)
            for (const auto& c : table.representatives.at(e.degree))
                std::cout << "   rep " << cochain_json(c, bc).dump() << "\n";
    }
    if (whitehead) {
        if (bc.branch() != Branch::leibniz)
            throw DomainFailure("the Whitehead comparison needs the leibniz branch");
        const auto w = whitehead_compare(bc, target.semisimple.value_or(false));
        std::cout << "whitehead (i = 1, 2, 3): total (" << w.total[0] << ", " << w.total[1] << ", " << w.total[2]
                  << "), column (" << w.column[0] << ", " << w.column[1] << ", " << w.column[2] << "): " << w.note()
                  << "\n";
    }
    return 0;
}

const DeformationJet& find_jet(const io::Document& doc, const std::string& name)
{
    auto it = doc.jets.find(name);
    if (it == doc.jets.end())
        throw io::ParseError("--jet", "no jet named \"" + name + "\"");
    const auto& jet = it->second.jet;
    ValidationReport r;
    if (jet.branch == Branch::poisson) {
        r = validate_poisson(*jet.poisson);
        r.merge(validate_associative(jet.poisson->A));
    } else {
        r = validate_pair(jet.pair);
        r.merge(validate_associative(jet.pair.A));
        r.merge(validate_lie(jet.pair.L));
    }
    if (!r.ok()) {
        print_report(it->second.base, "jet base", r);
        throw DomainFailure("jet base does not validate");
    }
    return jet;
}

void print_jet(const DeformationJet& jet)
{
    auto show = [](const char* name, int i, const Tensor3& t) {
        if (t.is_zero())
            return;
        std::cout << "  " << name << "_" << i << ": " << io::to_json(t)["entries"].dump() << "\n";
    };
    for (int i = 1; i <= jet.order; ++i) {
        show("alpha", i, jet.alpha_at(i));
        if (jet.branch == Branch::leibniz)
            show("mu", i, jet.mu_at(i));
        show("lambda", i, jet.lambda_at(i));
    }
    if (jet.is_zero())
        std::cout << "  (all terms zero)\n";
}

int cmd_deform_check(const std::string& path, const std::string& jet_name, int order)
{
    const auto doc = io::load_document(path);
    const auto& jet0 = find_jet(doc, jet_name);
    const auto jet = order > 0 ? jet0.with_order(order) : jet0;
    std::cout << "jet " << jet_name << " (" << to_string(jet.branch) << ", order " << jet.order << ")\n";
    bool clean = true;
    for (int n = 1; n <= jet.order; ++n) {
        const auto d = defects(jet, n);
        std::cout << "order " << n << ": " << (d.clean() ? "clean" : "defect") << "\n";
        if (!d.clean()) {
            clean = false;
            const auto bc = deformation_complex(jet);
            std::cout << "  " << cochain_json(defect_cochain(d, bc), bc).dump() << "\n";
        }
    }
    if (jet.order >= 1) {
        const auto inf = is_infinitesimal(jet);
        std::cout << "infinitesimal: " << (inf.cocycle ? "2-cocycle" : "not a cocycle");
        if (inf.cocycle)
            std::cout << ", class " << (inf.trivial_class ? "zero" : "nonzero");
        std::cout << "\n";
    }
    return clean ? 0 : 1;
}

int cmd_deform_lift(const std::string& path, const std::string& jet_name, int order, bool as_json)
{
    const auto doc = io::load_document(path);
    const auto& jet = find_jet(doc, jet_name);
    if (jet.order < 1)
        throw DomainFailure("jet has no order-1 terms to lift");
    if (!is_infinitesimal(jet).cocycle)
        throw DomainFailure("order-1 terms are not a total 2-cocycle");
    const auto res = lift_to_order(jet, order);
    const auto bc = deformation_complex(jet);
    bool zero = true;
    for (const auto& c : res.corrections)
        zero = zero && is_zero(c.coeffs);
    if (as_json) {
        json out{{"success", res.success}};
        if (res.success) {
            json terms = json::array();
            for (int i = 1; i <= res.jet.order; ++i) {
                json t{{"order", i}, {"alpha", io::to_json(res.jet.alpha_at(i))},
                       {"lambda", io::to_json(res.jet.lambda_at(i))}};
                if (res.jet.branch == Branch::leibniz)
                    t["mu"] = io::to_json(res.jet.mu_at(i));
                terms.push_back(t);
            }
            out["corrections_zero"] = zero;
            out["jet"] = terms;
        } else {
            out["failing_order"] = res.failing_order;
            out["obstruction_class"] = cochain_json(TotalCochain(bc.layout(3), res.obstruction_class), bc);
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (res.success) {
        std::cout << "lift to order " << order << ": success\n";
        std::cout << "higher corrections: " << (zero ? "all zero" : "nonzero") << "\n";
        print_jet(res.jet);
    } else {
        std::cout << "lift to order " << order << ": obstructed at order " << res.failing_order << "\n";
        std::cout << "obstruction class (reduced mod coboundaries):\n  "
                  << cochain_json(TotalCochain(bc.layout(3), res.obstruction_class), bc).dump() << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cohomology and deformations of Leibniz pairs and Poisson algebras"};
    app.require_subcommand(1);

    std::string file, pair, module, branch, jet;
    int max_degree = 3, order = 0;
    bool reps = false, as_json = false, whitehead = false;

    auto* validate = app.add_subcommand("validate", "check every object in a file against its axioms");
    validate->add_option("file", file, "input JSON document")->required();

    auto* coh = app.add_subcommand("cohomology", "Betti table of the total complex");
    coh->add_option("file", file, "input JSON document")->required();
    coh->add_option("--pair", pair, "pair or poisson object")->required();
    coh->add_option("--module", module, "coefficient module (default: the object itself)");
    coh->add_option("--max-degree", max_degree, "highest degree")->check(CLI::Range(0, 16));
    coh->add_option("--branch", branch, "leibniz or poisson")->check(CLI::IsMember({"leibniz", "poisson"}));
    coh->add_flag("--representatives", reps, "print canonical representative cocycles");
    coh->add_flag("--json", as_json, "machine-readable output");
    coh->add_flag("--whitehead", whitehead, "compare with the augmenting column in degrees 1..3");

    auto* deform = app.add_subcommand("deform", "deformation pipeline");
    deform->require_subcommand(1);
    auto* check = deform->add_subcommand("check", "axiom defects per order and the infinitesimal's class");
    check->add_option("file", file, "input JSON document")->required();
    check->add_option("--jet", jet, "jet object")->required();
    check->add_option("--order", order, "truncation order (default: the jet's own)")->check(CLI::Range(0, 64));
    auto* lift = deform->add_subcommand("lift", "extend the infinitesimal order by order");
    lift->add_option("file", file, "input JSON document")->required();
    lift->add_option("--jet", jet, "jet object")->required();
    lift->add_option("--order", order, "target order")->required()->check(CLI::Range(1, 64));
    lift->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*validate)
            return cmd_validate(file);
        if (*coh)
            return cmd_cohomology(file, pair, module, max_degree, branch, reps, as_json, whitehead);
        if (*check)
            return cmd_deform_check(file, jet, order);
        if (*lift)
            return cmd_deform_lift(file, jet, order, as_json);
    } catch (const io::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainFailure& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
