#include "eucalc/cli.hpp"

#include <fstream>
#include <optional>

#include <CLI11.hpp>

#include "eucalc/bivariant.hpp"
#include "eucalc/json_io.hpp"
#include "eucalc/series.hpp"

namespace eucalc {

namespace {

using io::json;

struct CommonOpts {
    std::vector<std::string> inputs;
    std::string output;
    int truncation = 16;
    std::uint64_t seed = 42;
    int count = 100;
    bool locally_closed = false;
};

void attach_common(CLI::App* cmd, CommonOpts& opts, bool with_inputs = true) {
    if (with_inputs) cmd->add_option("--input", opts.inputs, "input document file (repeatable)");
    cmd->add_option("--output", opts.output, "write the result document here instead of stdout");
}

io::DocumentSet load_inputs(const CommonOpts& opts) {
    // spaces first so that later documents can resolve references
    std::vector<std::pair<std::string, json>> parsed;
    parsed.reserve(opts.inputs.size());
    for (const auto& file : opts.inputs) parsed.emplace_back(file, io::read_document_file(file));
    io::DocumentSet docs;
    for (const auto& [file, doc] : parsed)
        if (io::sniff_kind(doc, file) == io::DocKind::Space) docs.add(doc, file);
    for (const auto& [file, doc] : parsed)
        if (io::sniff_kind(doc, file) != io::DocKind::Space) docs.add(doc, file);
    return docs;
}

void emit(const json& doc, const CommonOpts& opts, std::ostream& out) {
    if (opts.output.empty()) {
        out << doc.dump(2) << "\n";
        return;
    }
    std::ofstream file(opts.output);
    if (!file) throw Error(Err::UsageError, "cannot write '" + opts.output + "'");
    file << doc.dump(2) << "\n";
}

json value_doc(const Int& v) {
    json doc;
    doc["schemaVersion"] = 1;
    doc["value"] = io::int_to_json(v);
    return doc;
}

const SpacePtr& the_space(const io::DocumentSet& docs) {
    if (docs.spaces().size() != 1)
        throw Error(Err::UsageError, "expected exactly one space document");
    return docs.spaces().front();
}

const CellMap& the_map(const io::DocumentSet& docs) {
    if (docs.maps().size() != 1) throw Error(Err::UsageError, "expected exactly one map document");
    return docs.maps().front();
}

int cmd_space_validate(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    emit(io::save_space(*the_space(docs)), opts, out);
    return 0;
}

int cmd_euler(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    Int value = docs.cfs().empty() ? euler_cc(the_space(docs))
                                   : euler_integral(docs.cfs().front());
    emit(value_doc(value), opts, out);
    return 0;
}

int cmd_chi_y(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    IntPolynomial poly;
    if (!docs.cfs().empty()) poly = genus_integral(docs.cfs().front());
    else if (!docs.behrends().empty()) poly = chi_y_dt(docs.behrends().front());
    else throw Error(Err::UsageError, "chi-y needs a constructible function or Behrend document");
    emit(io::save_polynomial(poly, "y"), opts, out);
    return 0;
}

int cmd_dt(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    if (docs.behrends().empty()) throw Error(Err::UsageError, "dt needs a Behrend document");
    emit(value_doc(dt_invariant(docs.behrends().front())), opts, out);
    return 0;
}

int cmd_dt_morphism(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    const auto& f = the_map(docs);
    if (!docs.behrends().empty()) {
        emit(value_doc(dt_invariant(f, docs.behrends().front())), opts, out);
        return 0;
    }
    if (!docs.cfs().empty()) {
        auto [source_side, target_side] = dt_generalized(f, docs.cfs().front());
        json doc;
        doc["schemaVersion"] = 1;
        doc["sourceSide"] = io::int_to_json(source_side);
        doc["targetSide"] = io::int_to_json(target_side);
        emit(doc, opts, out);
        return 0;
    }
    throw Error(Err::UsageError, "dt-morphism needs Behrend data or a constructible function on the target");
}

int cmd_pushforward(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    if (docs.cfs().empty()) throw Error(Err::UsageError, "pushforward needs a constructible function");
    emit(io::save_cf(pushforward_cf(the_map(docs), docs.cfs().front())), opts, out);
    return 0;
}

int cmd_pullback(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    if (docs.cfs().empty()) throw Error(Err::UsageError, "pullback needs a constructible function");
    emit(io::save_cf(pullback_cf(the_map(docs), docs.cfs().front())), opts, out);
    return 0;
}

int cmd_k0_nf(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    if (docs.maps().empty()) throw Error(Err::UsageError, "k0 nf needs at least one map document");
    ClassPresentation presentation;
    for (const auto& m : docs.maps()) presentation.add_term(Int(1), m);
    emit(io::save_k0(scissor_nf(presentation)), opts, out);
    return 0;
}

int cmd_k0_onestar(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    if (docs.k0classes().empty()) throw Error(Err::UsageError, "k0 onestar needs a class document");
    emit(io::save_cf(one_star(docs.k0classes().front())), opts, out);
    return 0;
}

int cmd_k0_psi(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    if (docs.k0classes().size() != 2)
        throw Error(Err::UsageError, "k0 psi needs exactly two class documents");
    emit(io::save_k0(psi_product(docs.k0classes()[0], docs.k0classes()[1])), opts, out);
    return 0;
}

int cmd_k0_genus(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    if (docs.k0classes().empty()) throw Error(Err::UsageError, "k0 genus needs a class document");
    emit(io::save_polynomial(genus_eval(docs.k0classes().front()), "y"), opts, out);
    return 0;
}

int cmd_biv_membership(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    if (docs.behrends().empty() || docs.cfs().empty())
        throw Error(Err::UsageError, "membership needs a map, Behrend data on its target, "
                                     "and a constructible function on its source");
    GeneratorLattice lattice(the_map(docs), docs.behrends().front(),
                             opts.locally_closed ? GeneratorStyle::LocallyClosedCells
                                                 : GeneratorStyle::ClosedCells);
    auto cert = membership(lattice, docs.cfs().front());
    json doc;
    doc["schemaVersion"] = 1;
    doc["member"] = cert.member;
    if (cert.coefficients) {
        json coeffs = json::object();
        const auto& x = lattice.morphism().source();
        for (int c = 0; c < x->size(); ++c) coeffs[x->cell(c).id] = io::int_to_json((*cert.coefficients)[c]);
        doc["coefficients"] = std::move(coeffs);
    }
    if (cert.obstruction_cell) {
        doc["obstruction"] = {{"cell", *cert.obstruction_cell},
                              {"value", io::int_to_json(*cert.obstruction_value)},
                              {"modulus", io::int_to_json(*cert.obstruction_modulus)}};
    }
    emit(doc, opts, out);
    return 0;
}

int cmd_biv_check_axioms(const CommonOpts& opts, std::ostream& out) {
    auto report = check_axioms(opts.seed, opts.count);
    emit(io::save_report(report), opts, out);
    return report.all_passed() ? 0 : 1;
}

int cmd_transport(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    if (docs.eumatrices().empty())
        throw Error(Err::UsageError, "transport needs at least one unitriangular matrix document");
    TransportFamily theta;
    for (const auto& eu : docs.eumatrices()) theta.set(eu);

    if (docs.maps().empty()) {
        // transported product over the identity chain of one space
        if (docs.cfs().size() != 2)
            throw Error(Err::UsageError, "transport without a map needs exactly two functions");
        auto id = CellMap::identity(docs.cfs()[0].space());
        auto result = transported_product(theta, BivariantElement(id, docs.cfs()[0]),
                                          BivariantElement(id, docs.cfs()[1]));
        emit(io::save_cf(result.value), opts, out);
        return 0;
    }
    // transported pushforward along the map, ambient chain ending at a point
    if (docs.cfs().size() != 1)
        throw Error(Err::UsageError, "transport along a map needs exactly one function");
    const auto& f = the_map(docs);
    auto terminal = CellMap::identity(f.target());
    auto result = transported_pushforward(
        theta, f, terminal, BivariantElement(compose_maps(f, terminal), docs.cfs().front()));
    emit(io::save_cf(result.value), opts, out);
    return 0;
}

int cmd_macmahon(const CommonOpts& opts, std::ostream& out) {
    auto series = macmahon_series(opts.truncation);
    json doc;
    doc["schemaVersion"] = 1;
    json coeffs = json::array();
    for (const auto& c : series.coefficients()) coeffs.push_back(io::int_to_json(c));
    doc["coefficients"] = std::move(coeffs);
    emit(doc, opts, out);
    return 0;
}

int cmd_report(const CommonOpts& opts, std::ostream& out) {
    auto docs = load_inputs(opts);
    std::vector<AxiomInstance> instances = docs.instances();
    for (const auto& rep : docs.reports())
        for (const auto& failure : rep.at("failures"))
            instances.push_back(io::load_instance(failure, "report.failures"));
    if (instances.empty())
        throw Error(Err::UsageError, "report needs counterexample documents to replay");

    json replayed = json::array();
    bool any_failed = false;
    for (const auto& instance : instances) {
        auto outcome = evaluate_instance(instance);
        if (!outcome.pass) any_failed = true;
        json entry;
        entry["axiom"] = instance.axiom;
        entry["seed"] = std::to_string(instance.seed);
        entry["pass"] = outcome.pass;
        if (!outcome.pass) entry["detail"] = outcome.detail;
        replayed.push_back(std::move(entry));
    }
    json doc;
    doc["schemaVersion"] = 1;
    doc["replayed"] = std::move(replayed);
    emit(doc, opts, out);
    return any_failed ? 1 : 0;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact Euler-calculus workbench on finite cell models"};
    app.require_subcommand(1);
    CommonOpts opts;

    auto* space = app.add_subcommand("space", "space document operations");
    space->require_subcommand(1);
    auto* space_validate = space->add_subcommand("validate", "validate and normalize a space");
    attach_common(space_validate, opts);

    auto* euler = app.add_subcommand("euler", "Euler characteristic or integral");
    attach_common(euler, opts);
    auto* chi_y = app.add_subcommand("chi-y", "chi_y-genus of a function or Behrend data");
    attach_common(chi_y, opts);
    auto* dt = app.add_subcommand("dt", "DT-type invariant of a space");
    attach_common(dt, opts);
    auto* dt_morphism = app.add_subcommand("dt-morphism", "virtual count of a morphism");
    attach_common(dt_morphism, opts);
    auto* pushforward = app.add_subcommand("pushforward", "pushforward of a constructible function");
    attach_common(pushforward, opts);
    auto* pullback = app.add_subcommand("pullback", "pullback of a constructible function");
    attach_common(pullback, opts);

    auto* k0 = app.add_subcommand("k0", "relative Grothendieck-group operations");
    k0->require_subcommand(1);
    auto* k0_nf = k0->add_subcommand("nf", "scissor normal form of map generators");
    attach_common(k0_nf, opts);
    auto* k0_onestar = k0->add_subcommand("onestar", "image under 1l_*");
    attach_common(k0_onestar, opts);
    auto* k0_psi = k0->add_subcommand("psi", "ring product of two classes");
    attach_common(k0_psi, opts);
    auto* k0_genus = k0->add_subcommand("genus", "chi_y-genus of a class");
    attach_common(k0_genus, opts);

    auto* biv = app.add_subcommand("biv", "bivariant theory operations");
    biv->require_subcommand(1);
    auto* biv_membership = biv->add_subcommand("membership", "Behrend subtheory membership with certificate");
    attach_common(biv_membership, opts);
    biv_membership->add_flag("--locally-closed-generators", opts.locally_closed,
                             "span single cells instead of cell closures");
    auto* biv_check = biv->add_subcommand("check-axioms", "randomized bivariant axiom harness");
    attach_common(biv_check, opts, /*with_inputs=*/false);
    biv_check->add_option("--seed", opts.seed, "base seed for the check stream");
    biv_check->add_option("--count", opts.count, "number of checks to run");

    auto* transport = app.add_subcommand("transport", "operations conjugated through unitriangular isos");
    attach_common(transport, opts);

    auto* macmahon = app.add_subcommand("macmahon", "MacMahon series coefficients");
    attach_common(macmahon, opts, /*with_inputs=*/false);
    macmahon->add_option("--truncation", opts.truncation, "truncation order")
        ->check(CLI::NonNegativeNumber);

    auto* report = app.add_subcommand("report", "replay counterexample documents");
    attach_common(report, opts);

    std::vector<const char*> argv;
    argv.push_back("eucalc");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (space_validate->parsed()) return cmd_space_validate(opts, out);
        if (euler->parsed()) return cmd_euler(opts, out);
        if (chi_y->parsed()) return cmd_chi_y(opts, out);
        if (dt->parsed()) return cmd_dt(opts, out);
        if (dt_morphism->parsed()) return cmd_dt_morphism(opts, out);
        if (pushforward->parsed()) return cmd_pushforward(opts, out);
        if (pullback->parsed()) return cmd_pullback(opts, out);
        if (k0_nf->parsed()) return cmd_k0_nf(opts, out);
        if (k0_onestar->parsed()) return cmd_k0_onestar(opts, out);
        if (k0_psi->parsed()) return cmd_k0_psi(opts, out);
        if (k0_genus->parsed()) return cmd_k0_genus(opts, out);
        if (biv_membership->parsed()) return cmd_biv_membership(opts, out);
        if (biv_check->parsed()) return cmd_biv_check_axioms(opts, out);
        if (transport->parsed()) return cmd_transport(opts, out);
        if (macmahon->parsed()) return cmd_macmahon(opts, out);
        if (report->parsed()) return cmd_report(opts, out);
        err << "no subcommand\n";
        return 2;
    } catch (const Error& e) {
        json error_doc;
        error_doc["error"] = {{"code", err_name(e.code())}, {"message", e.what()}};
        err << error_doc.dump(2) << "\n";
        return 2;
    }
}

}  // namespace eucalc
