#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qg/bundle.hpp"
#include "qg/error.hpp"
#include "qg/group.hpp"
#include "qg/io.hpp"
#include "qg/lie.hpp"
#include "qg/lp.hpp"
#include "qg/multipliers.hpp"
#include "qg/products.hpp"
#include "qg/suite.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

// Input errors (unreadable files, malformed documents, bad arguments).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

qg::FiniteGroup load_group(const std::string& arg) {
  if (fs::exists(arg)) return qg::group_from_json(qg::read_json_file(arg));
  try {
    return qg::build_standard(qg::parse_group_spec(arg));
  } catch (const qg::GroupError& e) {
    throw UsageError("'" + arg + "' is neither a group file nor a group name: " + e.what());
  }
}

qg::QGBundle load_bundle(const std::string& path) {
  return qg::bundle_from_json(qg::read_json_file(path));
}

void emit_json(const std::string& out, const qg::Json& j) {
  if (out.empty())
    std::cout << j.dump(2) << '\n';
  else
    qg::write_json_file(out, j);
}

int finish_report(qg::VerifyReport r, const std::string& out) {
  r.sort_cases();
  std::cout << qg::format_report(r);
  if (!out.empty()) qg::write_json_file(out, qg::report_to_json(r));
  return r.all_pass() ? kPass : kFail;
}

qg::Json module_space_json(const qg::ModuleMapSpace& m) {
  return {{"schema", qg::kSchemaVersion},
          {"side", m.side == qg::Side::left ? "left" : "right"},
          {"dimension", m.dimension},
          {"predicted", m.predicted},
          {"generators_rank", m.generators_rank},
          {"direct_sum", m.direct_sum},
          {"containment_residual", m.containment_residual},
          {"cutoff", m.cutoff},
          {"smallest_kept", m.smallest_kept},
          {"largest_discarded", m.largest_discarded},
          {"gap_orders", m.gap_orders},
          {"ambiguous", m.ambiguous},
          {"singular_values", m.singular_values}};
}

struct App {
  CLI::App cli{"qg: finite quantum groups and their Lie-type products"};
  std::function<int()> action;

  App() {
    cli.require_subcommand(1);
    cli.set_help_all_flag("--help-all", "Expand all help");
    add_group();
    add_bundle();
    add_product();
    add_lie();
    add_multipliers();
    add_lp();
    add_suite();
  }

  void add_group() {
    auto* grp = cli.add_subcommand("group", "Build and validate finite groups")->require_subcommand(1);

    struct Build {
      std::string family, spec, out;
      int n = 0;
    };
    auto b = std::make_shared<Build>();
    auto* build = grp->add_subcommand("build", "Write the Cayley table of a standard group");
    build->add_option("--family", b->family, "cyclic, dihedral, symmetric, dicyclic");
    build->add_option("--n", b->n, "Family parameter")->check(CLI::PositiveNumber);
    build->add_option("--spec", b->spec, "Group name such as Z2xS3, Q8, D4");
    build->add_option("--out", b->out, "Output file (stdout if omitted)");
    build->callback([this, b] {
      action = [b] {
        qg::GroupSpec spec;
        if (!b->spec.empty()) {
          if (!b->family.empty()) throw UsageError("give either --spec or --family, not both");
          spec = qg::parse_group_spec(b->spec);
        } else {
          if (b->family.empty() || b->n < 1) throw UsageError("--family and --n are required");
          spec = {qg::parse_family(b->family), b->n, {}};
        }
        emit_json(b->out, qg::group_to_json(qg::build_standard(spec)));
        return kPass;
      };
    });

    auto file = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    auto* validate = grp->add_subcommand("validate", "Check the group axioms of a table");
    validate->add_option("file", *file, "Group JSON")->required()->check(CLI::ExistingFile);
    validate->add_option("--out", *out, "Report JSON");
    validate->callback([this, file, out] {
      action = [file, out] {
        const qg::RawGroup g = qg::raw_group_from_json(qg::read_json_file(*file));
        qg::VerifyReport r = qg::validate_group(g.name, g.labels, g.table);
        r.suite = "group";
        r.group = g.name;
        return finish_report(std::move(r), *out);
      };
    });
  }

  void add_bundle() {
    auto* bun = cli.add_subcommand("bundle", "Fundamental unitaries of a finite quantum group")
                    ->require_subcommand(1);

    struct Build {
      std::string group, out, unitary, j, j_hat;
      bool dual = false;
      double tol = 1e-10;
    };
    auto b = std::make_shared<Build>();
    auto* build = bun->add_subcommand("build", "Build and validate a bundle");
    build->add_option("--group", b->group, "Group JSON file or group name");
    build->add_flag("--dual", b->dual, "Build the dual bundle");
    build->add_option("--unitary", b->unitary, "Matrix JSON of a multiplicative unitary W")
        ->check(CLI::ExistingFile);
    build->add_option("--j", b->j, "Matrix JSON: linear part of J")->check(CLI::ExistingFile);
    build->add_option("--j-hat", b->j_hat, "Matrix JSON: linear part of J^")->check(CLI::ExistingFile);
    build->add_option("--tol", b->tol, "Absolute and relative tolerance")->check(CLI::NonNegativeNumber);
    build->add_option("--out", b->out, "Output file (stdout if omitted)");
    build->callback([this, b] {
      action = [b] {
        const qg::BundleOptions opt{{b->tol, b->tol}, true};
        qg::QGBundle bundle;
        try {
          if (!b->unitary.empty()) {
            if (!b->group.empty()) throw UsageError("give either --group or --unitary, not both");
            if (b->j.empty() || b->j_hat.empty())
              throw UsageError("--unitary requires --j and --j-hat");
            auto mat = [](const std::string& f) { return qg::matrix_from_json(qg::read_json_file(f)); };
            bundle = qg::build_from_unitary(mat(b->unitary), {mat(b->j)}, {mat(b->j_hat)}, opt);
          } else {
            if (b->group.empty()) throw UsageError("--group or --unitary is required");
            bundle = qg::build_commutative(load_group(b->group), opt);
          }
          if (b->dual) bundle = qg::build_dual(bundle, opt);
        } catch (const qg::IdentityError& e) {
          std::cerr << "qg: " << e.what() << '\n';
          return kFail;
        }
        emit_json(b->out, qg::bundle_to_json(bundle));
        return kPass;
      };
    });

    struct Validate {
      std::string file, out;
      double tol = 1e-10;
    };
    auto v = std::make_shared<Validate>();
    auto* validate = bun->add_subcommand("validate", "Re-check every identity of a stored bundle");
    validate->add_option("file", v->file, "Bundle JSON")->required()->check(CLI::ExistingFile);
    validate->add_option("--tol", v->tol, "Absolute and relative tolerance")->check(CLI::NonNegativeNumber);
    validate->add_option("--out", v->out, "Report JSON");
    validate->callback([this, v] {
      action = [v] {
        const qg::QGBundle b = load_bundle(v->file);
        qg::VerifyReport r = qg::validate_qg(b, {v->tol, v->tol});
        r.suite = "bundle";
        r.group = b.id;
        return finish_report(std::move(r), v->out);
      };
    });
  }

  void add_product() {
    struct Args {
      std::string bundle, op = "star", left, right, out;
    };
    auto a = std::make_shared<Args>();
    auto* cmd = cli.add_subcommand("product", "Multiply two trace-class elements");
    cmd->add_option("--bundle", a->bundle, "Bundle JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("--op", a->op, "Product")
        ->check(CLI::IsMember({"star", "bullet", "ostar", "ostar_plus"}));
    cmd->add_option("--left", a->left, "Matrix JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("--right", a->right, "Matrix JSON")->required()->check(CLI::ExistingFile);
    cmd->add_option("--out", a->out, "Output file (stdout if omitted)");
    cmd->callback([this, a] {
      action = [a] {
        const qg::QGBundle b = load_bundle(a->bundle);
        const qg::CMatrix x = qg::matrix_from_json(qg::read_json_file(a->left));
        const qg::CMatrix y = qg::matrix_from_json(qg::read_json_file(a->right));
        qg::CMatrix r;
        if (a->op == "star") r = qg::star(b, x, y);
        else if (a->op == "bullet") r = qg::bullet(b, x, y);
        else if (a->op == "ostar") r = qg::ostar(b, x, y);
        else r = qg::ostar_plus(b, x, y);
        emit_json(a->out, qg::matrix_to_json(r));
        return kPass;
      };
    });
  }

  void add_lie() {
    auto* lie = cli.add_subcommand("lie", "The mixed products and their identity")->require_subcommand(1);

    struct Verify {
      std::string bundle, out;
      int samples = 200;
      double tol = 1e-9;
      std::uint64_t seed = 7;
    };
    auto v = std::make_shared<Verify>();
    auto* verify = lie->add_subcommand("verify", "Associativity of the mixed products");
    verify->add_option("--bundle", v->bundle, "Bundle JSON")->required()->check(CLI::ExistingFile);
    verify->add_option("--samples", v->samples, "Random triples")->check(CLI::PositiveNumber);
    verify->add_option("--tol", v->tol, "Tolerance")->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", v->seed, "Seed");
    verify->add_option("--out", v->out, "Report JSON");
    verify->callback([this, v] {
      action = [v] {
        const qg::QGBundle b = load_bundle(v->bundle);
        qg::VerifyReport r = qg::verify_associativity(b, {v->samples, v->seed, v->tol});
        r.suite = "lie";
        r.group = b.id;
        r.seed = v->seed;
        return finish_report(std::move(r), v->out);
      };
    });

    struct Ident {
      std::string bundle, out;
      double tol = 1e-10;
    };
    auto e = std::make_shared<Ident>();
    auto* ident = lie->add_subcommand("identity", "The identity element of the mixed product");
    ident->add_option("--bundle", e->bundle, "Bundle JSON")->required()->check(CLI::ExistingFile);
    ident->add_option("--tol", e->tol, "Tolerance")->check(CLI::NonNegativeNumber);
    ident->add_option("--out", e->out, "Output file (stdout if omitted)");
    ident->callback([this, e] {
      action = [e] {
        const qg::QGBundle b = load_bundle(e->bundle);
        try {
          emit_json(e->out, qg::matrix_to_json(qg::identity_element(b, e->tol)));
        } catch (const qg::IdentityError& ex) {
          std::cerr << "qg: " << ex.what() << '\n';
          return kFail;
        }
        return kPass;
      };
    });

    struct Table {
      std::string group, product = "ostar", out, csv;
    };
    auto t = std::make_shared<Table>();
    auto* table = lie->add_subcommand("table", "Structure constants over the matrix-unit basis");
    table->add_option("--group", t->group, "Group JSON file or group name")->required();
    table->add_option("--product", t->product, "Product")
        ->check(CLI::IsMember({"star", "bullet", "ostar", "ostar_plus"}));
    table->add_option("--out", t->out, "JSON output (stdout if omitted)");
    table->add_option("--csv", t->csv, "Also write CSV here");
    table->callback([this, t] {
      action = [t] {
        const qg::StructureTable st = qg::emit_structure_constants(
            load_group(t->group), qg::parse_structure_product(t->product));
        emit_json(t->out, qg::table_to_json(st));
        if (!t->csv.empty()) qg::write_text_file(t->csv, qg::table_to_csv(st));
        return kPass;
      };
    });
  }

  void add_multipliers() {
    auto* mult = cli.add_subcommand("multipliers", "Completely bounded module maps")->require_subcommand(1);
    struct Dim {
      std::string bundle, side = "left", out;
      double cutoff = 1e-8;
    };
    auto a = std::make_shared<Dim>();
    auto* dim = mult->add_subcommand("dim", "Dimension of the space of module maps");
    dim->add_option("--bundle", a->bundle, "Bundle JSON")->required()->check(CLI::ExistingFile);
    dim->add_option("--side", a->side, "left or right")->check(CLI::IsMember({"left", "right"}));
    dim->add_option("--cutoff", a->cutoff, "Relative singular-value cutoff")->check(CLI::PositiveNumber);
    dim->add_option("--out", a->out, "Report JSON (stdout if omitted)");
    dim->callback([this, a] {
      action = [a] {
        const qg::QGBundle b = load_bundle(a->bundle);
        const qg::Side side = a->side == "left" ? qg::Side::left : qg::Side::right;
        const qg::ModuleMapSpace m = qg::module_map_space_dim(b, side, {a->cutoff, false});
        qg::Json j = module_space_json(m);
        j["bundle"] = b.id;
        if (a->out.empty()) {
          std::cout << j.dump(2) << '\n';
        } else {
          qg::write_json_file(a->out, j);
          std::printf("%s side: dimension %d, predicted %d, gap %.1f orders%s\n", a->side.c_str(),
                      m.dimension, m.predicted, m.gap_orders, m.ambiguous ? " (ambiguous)" : "");
        }
        return m.ambiguous ? kFail : kPass;
      };
    });
  }

  void add_lp() {
    auto* lp = cli.add_subcommand("lp", "The fundamental isometries on l^p")->require_subcommand(1);
    struct Verify {
      std::string group, out;
      std::vector<double> p{2.0};
      int samples = 200;
      std::uint64_t seed = 7;
    };
    auto v = std::make_shared<Verify>();
    auto* verify = lp->add_subcommand("verify", "Commutation relation and the p-products");
    verify->add_option("--group", v->group, "Group JSON file or group name")->required();
    verify->add_option("--p", v->p, "Exponents in (1, inf)")->check(CLI::Range(1.0, 1e300));
    verify->add_option("--samples", v->samples, "Random triples")->check(CLI::PositiveNumber);
    verify->add_option("--seed", v->seed, "Seed");
    verify->add_option("--out", v->out, "Report JSON");
    verify->callback([this, v] {
      action = [v] {
        qg::SuiteConfig cfg;
        cfg.p_values = v->p;
        cfg.samples = v->samples;
        cfg.seed = v->seed;
        return finish_report(qg::run_suite(qg::SuiteKind::lp, load_group(v->group), cfg), v->out);
      };
    });
  }

  void add_suite() {
    auto* suite = cli.add_subcommand("suite", "Verification suites")->require_subcommand(1);
    struct Run {
      std::string suite = "all", group, out;
      qg::SuiteConfig cfg;
    };
    auto r = std::make_shared<Run>();
    auto* run = suite->add_subcommand("run", "Run a suite and report every identity");
    run->add_option("--suite", r->suite, "pentagon, products, lie, multipliers, lp, all")
        ->check(CLI::IsMember({"pentagon", "products", "lie", "multipliers", "lp", "all"}));
    run->add_option("--group", r->group, "Group JSON file or group name")->required();
    run->add_option("--seed", r->cfg.seed, "Seed");
    run->add_option("--tol-abs", r->cfg.tol.absolute, "Absolute tolerance")->check(CLI::NonNegativeNumber);
    run->add_option("--tol-rel", r->cfg.tol.relative, "Relative tolerance")->check(CLI::NonNegativeNumber);
    run->add_option("--identity-tol", r->cfg.identity_tol, "Tolerance for sampled identities")
        ->check(CLI::NonNegativeNumber);
    run->add_option("--samples", r->cfg.samples, "Samples per sampled identity")->check(CLI::PositiveNumber);
    run->add_option("--p", r->cfg.p_values, "Exponents for the lp suite")->check(CLI::Range(1.0, 1e300));
    run->add_option("--exact-dim-order", r->cfg.max_exact_dim_order,
                    "Largest order for the exact module-map dimension");
    run->add_option("--out", r->out, "Report JSON");
    run->callback([this, r] {
      action = [r] {
        return finish_report(qg::run_suite(qg::parse_suite_kind(r->suite), load_group(r->group), r->cfg),
                             r->out);
      };
    });
  }
};

}  // namespace

int main(int argc, char** argv) {
  App app;
  try {
    app.cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.cli.exit(e);
    return rc == 0 ? kPass : kUsage;
  }
  try {
    return app.action();
  } catch (const UsageError& e) {
    std::cerr << "qg: " << e.what() << '\n';
  } catch (const qg::FormatError& e) {
    std::cerr << "qg: " << e.what() << '\n';
  } catch (const qg::GroupError& e) {
    std::cerr << "qg: invalid group: " << e.what() << '\n';
  } catch (const qg::IdentityError& e) {
    std::cerr << "qg: " << e.what() << '\n';
    return kFail;
  } catch (const qg::Error& e) {
    std::cerr << "qg: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "qg: " << e.what() << '\n';
  }
  return kUsage;
}
