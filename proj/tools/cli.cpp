#include "cli.hpp"

#include <CLI11.hpp>

#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>

#include "kktco/correspondence.hpp"
#include "kktco/io.hpp"
#include "kktco/zoo.hpp"

namespace kktco::cli {

namespace {

/// Bad input: unreadable file, unknown zoo name, mismatched field or shape.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string verb;
    std::string input;
    std::string output;
    std::string field;
    std::string subspace;
    std::string which;
    std::uint64_t seed = 0;
    std::size_t samples = 20;
    bool dry_run = false;
};

struct Input {
    Structure structure;
    bool from_zoo = false;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw InputError("cannot write " + path);
}

std::optional<Field> requested_field(const Options& o)
{
    if (o.field.empty()) return std::nullopt;
    return Field::parse(o.field);
}

Field field_of(const Structure& s)
{
    return std::visit([](const auto& x) { return x.field(); }, s);
}

FiniteAlgebra zoo_algebra(const std::string& spec, Field f)
{
    try {
        return generate(parse_zoo_spec(spec, f));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

Input load(const Options& o)
{
    const auto f = requested_field(o);
    if (o.input.rfind("zoo:", 0) == 0) return {zoo_algebra(o.input.substr(4), f.value_or(Field::rational())), true};
    Input in{read_structure(read_file(o.input)), false};
    if (f && *f != field_of(in.structure))
        throw InputError("--field " + f->to_string() + " does not match the file field " + field_of(in.structure).to_string());
    return in;
}

/// Coalgebra inputs pass through; an algebra J is read as the dual of A = J*.
FiniteCoalgebra as_coalgebra(const Input& in)
{
    if (const auto* c = std::get_if<FiniteCoalgebra>(&in.structure)) return *c;
    return dualize_algebra(std::get<FiniteAlgebra>(in.structure));
}

FiniteAlgebra as_algebra(const Input& in)
{
    if (const auto* a = std::get_if<FiniteAlgebra>(&in.structure)) return *a;
    return dual_algebra(std::get<FiniteCoalgebra>(in.structure));
}

std::string tuple_text(const std::vector<std::size_t>& t)
{
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
    return s + ")";
}

/// Properties that may or may not hold: PASS when they do, FLAG otherwise.
void property(Report& r, const std::string& name, const std::optional<std::vector<std::size_t>>& violation)
{
    if (violation)
        r.flag(name, "no " + tuple_text(*violation));
    else
        r.add(name, true);
}

void property(Report& r, const std::string& name, bool holds)
{
    if (holds)
        r.add(name, true);
    else
        r.flag(name, "no");
}

Report check_algebra(const FiniteAlgebra& alg)
{
    Report r;
    r.info("dim", std::to_string(alg.dim()));
    property(r, "commutative", is_commutative(alg));
    const auto jv = jordan_violation(alg);
    property(r, "jordan", jv);
    property(r, "unital", find_unity(alg).has_value());
    property(r, "lie", lie_violation(alg));
    if (!jv) {
        const auto e1 = eq1_violation(alg);
        r.add("eq1", !e1, e1 ? tuple_text(*e1) : "");
        const auto e2 = eq2_violation(alg);
        r.add("eq2", !e2, e2 ? tuple_text(*e2) : "");
    }
    return r;
}

/// An empty row list is the zero subspace of A.
Subspace load_subspace(const Options& o, Field f, std::size_t n)
{
    if (o.subspace.empty()) throw InputError("--subspace is required");
    if (o.subspace.front() == '[') {
        std::string compact = o.subspace;
        std::erase_if(compact, [](char ch) { return std::isspace(static_cast<unsigned char>(ch)) != 0; });
        if (compact == "[]") return Subspace::zero(f, n);
        return parse_subspace_rows(o.subspace, f);
    }
    Subspace s = read_subspace(read_file(o.subspace));
    if (s.field() != f) throw InputError("subspace field does not match the input");
    return s;
}

void require_ambient(const Subspace& s, std::size_t n, const char* what)
{
    if (s.ambient_dim() != n)
        throw InputError("subspace rows have length " + std::to_string(s.ambient_dim()) + ", expected " +
                         std::to_string(n) + " for " + what);
}

void emit(const Options& o, const std::string& text)
{
    if (!o.output.empty()) write_file(o.output, text);
}

Report verb_check(const Options&, const Input& in)
{
    if (const auto* a = std::get_if<FiniteAlgebra>(&in.structure)) return check_algebra(*a);
    const auto& c = std::get<FiniteCoalgebra>(in.structure);
    Report r;
    r.info("dim", std::to_string(c.dim()));
    property(r, "counit", counit(c).has_value());
    r.merge(check_algebra(dual_algebra(c)), "dual");
    return r;
}

Report verb_dualize(const Options& o, const Input& in)
{
    Report r;
    if (const auto* a = std::get_if<FiniteAlgebra>(&in.structure)) {
        const FiniteCoalgebra c = dualize_algebra(*a);
        r.info("kind", "coalgebra");
        r.add("involution", dual_algebra(c) == *a);
        emit(o, write_coalgebra(c));
    } else {
        const auto& c = std::get<FiniteCoalgebra>(in.structure);
        const FiniteAlgebra d = dual_algebra(c);
        r.info("kind", "algebra");
        r.add("involution", dualize_algebra(d) == c);
        emit(o, write_algebra(d));
    }
    return r;
}

Report verb_derivations(const Options& o, const Input& in)
{
    const FiniteAlgebra alg = as_algebra(in);
    const OperatorSpace der = derivations(alg);
    const OperatorSpace inner = inner_derivations(alg);
    Report r;
    r.info("derivations_dim", std::to_string(der.dim()));
    r.info("inner_derivations_dim", std::to_string(inner.dim()));
    r.add("inner_in_derivations", der.contains(inner));
    emit(o, write_subspace(der.span()));
    return r;
}

Report verb_kkt(const Options& o, const Input& in)
{
    const KKTAlgebra k = build_kkt(as_algebra(in));
    Report r;
    r.info("dim", std::to_string(k.dim()));
    r.info("intder_dim", std::to_string(k.part_dim(KKTPart::IntDer)));
    r.add("jacobi", check_jacobi(k));
    r.add("r_closure", check_r_closure(k));
    r.info("killing_rank", std::to_string(killing_rank(k.lie())));
    r.info("center_dim", std::to_string(center(k.lie()).dim()));
    emit(o, write_kkt(k));
    return r;
}

Report verb_lie_coalgebra(const Options& o, const Input& in)
{
    const LSpace ls = delta_L_global(as_coalgebra(in));
    Report r;
    r.info("dim", std::to_string(ls.dim()));
    r.info("mixed_dim", std::to_string(ls.part_dim(LPart::Mixed)));
    r.merge(pairing_report(ls), "pairing");
    r.add("round_trip", transported_dual(ls).product() == ls.kkt().lie().product());
    r.merge(lie_coalgebra_axioms(ls.coalgebra()), "axioms");
    emit(o, write_lspace(ls));
    return r;
}

Report verb_generate(const Options& o, const Input& in)
{
    const auto& alg = std::get<FiniteAlgebra>(in.structure);
    Report r;
    r.info("dim", std::to_string(alg.dim()));
    property(r, "jordan", jordan_violation(alg));
    emit(o, write_algebra(alg));
    return r;
}

Report verb_classify(const Options& o, const Input& in)
{
    const FiniteCoalgebra c = as_coalgebra(in);
    const Subspace s = load_subspace(o, c.field(), c.dim());
    Report r;
    r.info("dim", std::to_string(s.dim()));
    if (s.ambient_dim() == c.dim()) {
        property(r, "subcoalgebra", is_subcoalgebra(c, s));
        property(r, "coideal", is_coideal(c, s));
        r.merge(duality_check(c, s), "duality");
        return r;
    }
    const LatticeContext ctx = make_context(c);
    require_ambient(s, ctx.ls.dim(), "A or L(A)");
    const auto& lc = ctx.ls.coalgebra();
    r.info("ambient", "L(A)");
    property(r, "subcoalgebra", is_subcoalgebra(lc, s));
    property(r, "coideal", is_coideal(lc, s));
    property(r, "pi_closed", image(s, ctx.ls.pi_matrix()) == s);
    property(r, "in_Uperp", ctx.u_perp.contains(s));
    r.info("A_part_dim", std::to_string(a_part(ctx, s).dim()));
    return r;
}

Report verb_lift(const Options& o, const Input& in)
{
    const FiniteCoalgebra c = as_coalgebra(in);
    const Lift which = parse_lift(o.which);
    const Subspace s = load_subspace(o, c.field(), c.dim());
    require_ambient(s, c.dim(), "A");
    const LatticeContext ctx = make_context(c);
    Report r;
    const bool co = which == Lift::L1Star || which == Lift::L2Star;
    const bool ok = co ? is_coideal(c, s) : is_subcoalgebra(c, s);
    r.add(co ? "precondition_coideal" : "precondition_subcoalgebra", ok);
    if (!ok) return r;
    const Subspace l = lift(ctx, which, s);
    const auto& lc = ctx.ls.coalgebra();
    r.info("dim", std::to_string(l.dim()));
    if (co) {
        r.add("coideal", is_coideal(lc, l));
        r.add("pi_closed", image(l, ctx.ls.pi_matrix()) == l);
        r.add("in_Uperp", ctx.u_perp.contains(l));
    } else {
        r.add("subcoalgebra", is_subcoalgebra(lc, l));
    }
    emit(o, write_subspace(l));
    return r;
}

/// Per-clause tallies across samples, in first-seen order.
class Tally {
public:
    void add(const Report& r, const std::string& prefix, std::size_t sample)
    {
        for (const auto& c : r.clauses()) {
            const std::string name = prefix + "." + c.name;
            auto [it, fresh] = index_.try_emplace(name, rows_.size());
            if (fresh) rows_.push_back(Row{name, 0, 0, 0, {}});
            Row& row = rows_[it->second];
            ++row.seen;
            if (c.verdict == Verdict::Fail) {
                if (row.failed++ == 0) row.first = "sample " + std::to_string(sample) + (c.witness.empty() ? "" : ": " + c.witness);
            } else if (c.verdict == Verdict::Flag) {
                ++row.flagged;
            }
        }
    }

    void write(Report& out) const
    {
        for (const auto& row : rows_) {
            const std::string counts = std::to_string(row.seen - row.failed) + "/" + std::to_string(row.seen);
            if (row.failed)
                out.add(row.name, false, counts + " first failure " + row.first);
            else if (row.flagged)
                out.flag(row.name, counts + " flagged " + std::to_string(row.flagged));
            else
                out.info(row.name, counts);
        }
    }

private:
    struct Row {
        std::string name;
        std::size_t seen = 0;
        std::size_t failed = 0;
        std::size_t flagged = 0;
        std::string first;
    };
    std::vector<Row> rows_;
    std::map<std::string, std::size_t> index_;
};

std::size_t distinct(std::vector<Subspace> v)
{
    std::vector<Subspace> seen;
    for (auto& s : v) {
        bool known = false;
        for (const auto& t : seen) known = known || t == s;
        if (!known) seen.push_back(std::move(s));
    }
    return seen.size();
}

Report verb_verify(const Options& o, const Input& in)
{
    const FiniteCoalgebra c = as_coalgebra(in);
    const LatticeContext ctx = make_context(c);
    Report r;
    r.merge(u_report(ctx), "U");
    ScalarSampler sampler(o.seed, c.field());
    Tally tally;
    std::vector<Subspace> coideals, subcoalgebras;
    for (std::size_t k = 0; k < o.samples; ++k) {
        const Subspace v = random_coideal(c, sampler);
        Report pre;
        pre.add("is_coideal", is_coideal(c, v));
        tally.add(pre, "theorem2", k);
        tally.add(theorem2_verify(ctx, v), "theorem2", k);
        tally.add(theorem2_reverse(ctx, L1_star(ctx, v)), "theorem2_converse.L1*", k);
        tally.add(theorem2_reverse(ctx, L2_star(ctx, v)), "theorem2_converse.L2*", k);
        coideals.push_back(v);

        const Subspace b = random_subcoalgebra(c, sampler);
        Report pre3;
        pre3.add("is_subcoalgebra", is_subcoalgebra(c, b));
        tally.add(pre3, "theorem3", k);
        tally.add(theorem3_verify(ctx, b), "theorem3", k);
        tally.add(theorem3_reverse(ctx, I1_star(ctx, b)), "theorem3_converse.I1*", k);
        tally.add(theorem3_reverse(ctx, I2_star(ctx, b)), "theorem3_converse.I2*", k);
        subcoalgebras.push_back(b);
    }
    r.info("samples", std::to_string(o.samples));
    r.info("distinct_coideals", std::to_string(distinct(std::move(coideals))));
    r.info("distinct_subcoalgebras", std::to_string(distinct(std::move(subcoalgebras))));
    tally.write(r);
    return r;
}

Report axioms_for(const FiniteCoalgebra& c)
{
    Report r;
    if (is_lie(dual_algebra(c))) {
        r.info("structure", "lie-coalgebra");
        r.merge(lie_coalgebra_axioms(c), "axioms");
        return r;
    }
    const LSpace ls = delta_L_global(c);
    r.info("structure", "L(A)");
    r.merge(lie_coalgebra_axioms(ls.coalgebra()), "axioms");
    r.merge(pairing_report(ls), "pairing");
    const auto v = invariance_violation(ls);
    r.add("invariance", !v, v ? tuple_text(*v) : "");
    r.merge(intder_duality_report(ls), "intder");
    return r;
}

Report verb_axioms(const Options&, const Input& in)
{
    return axioms_for(as_coalgebra(in));
}

using Handler = Report (*)(const Options&, const Input&);

struct Verb {
    const char* name;
    const char* help;
    Handler handler;
    bool subspace = false;
    bool which = false;
    bool sampling = false;
};

const std::vector<Verb>& verbs()
{
    static const std::vector<Verb> v = {
        {"check", "Report the identities an algebra or coalgebra satisfies", verb_check},
        {"dualize", "Transpose an algebra into a coalgebra or back", verb_dualize},
        {"derivations", "Derivations and inner derivations of an algebra", verb_derivations},
        {"kkt", "KKT Lie algebra of a unital Jordan algebra", verb_kkt},
        {"lie-coalgebra", "Lie coalgebra L(A) of a Jordan coalgebra", verb_lie_coalgebra},
        {"generate", "Write a zoo algebra", verb_generate},
        {"classify-subspace", "Classify a subspace of A or of L(A)", verb_classify, true},
        {"lift", "Lift a coideal or subcoalgebra of A into L(A)", verb_lift, true, true},
        {"verify-theorems", "Check the lattice correspondences on seeded samples", verb_verify, false, false, true},
        {"axioms", "Lie coalgebra axioms and pairing identities", verb_axioms},
    };
    return v;
}

Input load_for(const Verb& verb, Options& o)
{
    if (std::string(verb.name) == "generate" && o.input.rfind("zoo:", 0) != 0) o.input = "zoo:" + o.input;
    Input in = load(o);
    if (verb.which) parse_lift(o.which);
    if (verb.subspace) {
        const std::size_t n = std::visit([](const auto& x) { return x.dim(); }, in.structure);
        load_subspace(o, field_of(in.structure), n);
    }
    return in;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Jordan coalgebras, KKT Lie algebras and their Lie coalgebras", "kktco"};
    app.require_subcommand(1, 1);
    std::map<const CLI::App*, const Verb*> owner;
    for (const auto& v : verbs()) {
        CLI::App* sc = app.add_subcommand(v.name, v.help);
        owner[sc] = &v;
        sc->add_option("input", o.input, "File or zoo:<name>[:<param>]")->required();
        sc->add_option("-o,--output", o.output, "Write the artifact here");
        sc->add_option("--field", o.field, "rational or prime:<p> (zoo inputs)");
        sc->add_flag("--dry-run", o.dry_run, "Validate inputs only");
        if (v.subspace) sc->add_option("--subspace", o.subspace, "Rows as scalar-string lists, or a subspace file")->required();
        if (v.which)
            sc->add_option("--which", o.which, "L1*, L2*, I1* or I2*")
                ->required()
                ->check(CLI::IsMember({"L1*", "L2*", "I1*", "I2*"}));
        if (v.sampling) {
            sc->add_option("--seed", o.seed, "Sampling seed");
            sc->add_option("--samples", o.samples, "Number of samples");
        }
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    const Verb& verb = *owner.at(app.get_subcommands().front());
    o.verb = verb.name;

    Input in;
    try {
        in = load_for(verb, o);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    Report r;
    if (o.dry_run) {
        r.info("input", std::holds_alternative<FiniteAlgebra>(in.structure) ? "algebra" : "coalgebra");
        out << r.to_text();
        return 0;
    }
    try {
        r = verb.handler(o, in);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const IdentityViolation& e) {
        r.add("precondition", false, std::string(e.what()) + " " + tuple_text(e.witness()));
    } catch (const std::domain_error& e) {
        r.add("precondition", false, e.what());
    } catch (const std::invalid_argument& e) {
        r.add("precondition", false, e.what());
    }
    out << r.to_text();
    return r.passed() ? 0 : 1;
}

}  // namespace kktco::cli
