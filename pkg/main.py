import argparse
import json
import sys

from dotenv import load_dotenv


def classify_cmd(args: argparse.Namespace) -> int:
    from app.io.model_file import load_model
    from app.io.report import render_classification
    from app.stability.classify import classify

    model = load_model(args.model)
    concepts = [c.strip() for c in args.concepts.split(",") if c.strip()] if args.concepts else None
    report = classify(model.phi, model.costs, concepts, orders=args.order or (), order_mode=args.order_mode)
    print(render_classification(report, args.format))
    return 0


def verify_cmd(args: argparse.Namespace) -> int:
    from app.io.report import render_verification
    from app.theorems import run_random_batch, run_theorem

    if args.random:
        reports = run_random_batch(args.theorem, args.random, args.players, args.seed, args.jobs)
        model_name, model_digest = f"random x{args.random} (seed {args.seed})", None
    else:
        if not args.model:
            print("ERROR: verify needs a model file or --random K", file=sys.stderr)
            return 2
        from app.io.model_file import digest, load_model

        model = load_model(args.model)
        reports = [run_theorem(args.theorem, model)]
        model_name, model_digest = model.name, digest(args.model)

    if args.random and args.format == "table":
        failed = [k for k, r in enumerate(reports) if not r.ok]
        print(f"{args.theorem}: {len(reports) - len(failed)} of {len(reports)} instances verified")
        if failed:
            print(render_verification([reports[k] for k in failed[:3]], args.format))
    else:
        print(render_verification(reports, args.format))

    if args.record:
        from app.db.run_repo import add_run

        for k, report in enumerate(reports):
            add_run(report, model_name if len(reports) == 1 else f"{model_name} #{k}", model_digest)
    return 0 if all(r.ok for r in reports) else 1


def equilibria_cmd(args: argparse.Namespace) -> int:
    from app.consent.equilibria import Method, m_networks, nash_networks_two_sided, one_sided_support
    from app.consent.equilibria import two_sided_profiles
    from app.consent.profiles import SignalProfile
    from app.io.model_file import load_model
    from app.io.report import render_listing
    from app.net.network import Network
    from app.net.payoffs import CostStructure, fmt_vector

    model = load_model(args.model)
    phi, n = model.phi, model.n
    rows = []
    if args.variant == "basic":
        for g in m_networks(phi, Method(args.method)):
            support = SignalProfile.non_superfluous(g)
            rows.append(["{" + g.key() + "}", fmt_vector(phi(g)), str(support)])
    elif args.variant == "two-sided":
        costs = model.costs or CostStructure.zeros(n)
        networks = nash_networks_two_sided(phi, costs, Method(args.method))
        grouped = two_sided_profiles(phi, costs)
        for g in networks:
            profs = sorted(grouped.get(g.bits, [SignalProfile.non_superfluous(g)]), key=lambda p: not p.is_non_superfluous)
            rows.append(["{" + g.key() + "}", fmt_vector(phi(g)), str(profs[0])])
    else:
        gamma = model.one_sided_costs() or CostStructure.zeros(n)
        for bits, prof in sorted(one_sided_support(phi, gamma).items()):
            g = Network(n, bits)
            rows.append(["{" + g.key() + "}", fmt_vector(phi(g)), str(prof)])

    print(render_listing(f"{args.variant} equilibrium networks of {model.name}",
                         ["network", "payoffs", "supporting profile"], rows, args.format))
    return 0


def potentials_cmd(args: argparse.Namespace) -> int:
    from pathlib import Path

    from app.consent.models import myerson_game
    from app.io.model_file import load_model
    from app.io.report import render_listing, to_json
    from app.potentials.game import exact_game_potential, ordinal_game_potential
    from app.potentials.network import exact_network_potential, ordinal_network_potential
    from app.config import settings

    model = load_model(args.model)
    checks = [("network exact", exact_network_potential(model.phi)),
              ("network ordinal", ordinal_network_potential(model.phi))]
    if model.n <= settings().max_profile_players:
        game = myerson_game(model.phi)
        checks += [("myerson exact", exact_game_potential(game)),
                   ("myerson ordinal", ordinal_game_potential(game))]
    rows = [[name, bool(v), "" if v else json.dumps(v.witness.to_dict(), ensure_ascii=False)] for name, v in checks]
    print(render_listing(f"potentials of {model.name}", ["potential", "exists", "witness"], rows, args.format))

    found = next((v.support for name, v in checks[:2] if v), None)
    if found is not None:
        table = found.table()
        if args.format == "table":
            print()
            print(render_listing(f"{found.kind.value} potential", ["network", "value"], list(table.items())))
        if args.out:
            out = Path(args.out)
            out.parent.mkdir(parents=True, exist_ok=True)
            out.write_text(to_json({"kind": found.kind.value, "values": table}) + "\n", encoding="utf-8")
            print(f"Potential written to: {out}")
    return 0


def correlated_cmd(args: argparse.Namespace) -> int:
    from app.consent.models import ConsentModel, ModelVariant
    from app.correlated.devices import deviation_values, expected_payoffs, is_correlated_equilibrium
    from app.correlated.devices import is_ex_ante_self_enforcing
    from app.io.device_file import load_device
    from app.io.model_file import ModelFile, load_any
    from app.io.report import render_listing
    from app.net.payoffs import fmt_rational, fmt_vector

    source = load_any(args.model)
    if isinstance(source, ModelFile):
        variant = ModelVariant(args.variant)
        game = ConsentModel(source.phi, source.costs, variant).game()
        device = load_device(args.device, game, signals=variant is not ModelVariant.ONE_SIDED)
    else:
        game = source
        device = load_device(args.device, game)

    rows = [["expected payoffs", fmt_vector(expected_payoffs(device, game))]]
    verdicts = []
    if args.mode in ("conditional", "both"):
        verdicts.append(("correlated equilibrium", is_correlated_equilibrium(device, game)))
    if args.mode in ("ex-ante", "both"):
        verdicts.append(("ex-ante self-enforcing", is_ex_ante_self_enforcing(device, game)))
    for name, v in verdicts:
        rows.append([name, "yes" if v else "no: " + json.dumps(v.witness.to_dict(), ensure_ascii=False)])
    for i in range(1, game.n + 1):
        values = deviation_values(device, game, i)
        rows.append([f"player {i} fixed-strategy values",
                     ", ".join(f"{label}: {fmt_rational(v)}" for label, v in values.items())])
    print(render_listing(f"device {args.device}", ["item", "value"], rows, args.format))
    return 0 if all(v for _, v in verdicts) else 1


def generate_trade_cmd(args: argparse.Namespace) -> int:
    from app.io.model_file import ModelFile, emit_model, save_model
    from app.io.report import to_json
    from app.net.trade import trade_payoffs

    phi = trade_payoffs(args.n, args.c, args.precision)
    model = ModelFile(phi, None, None, f"trade-n{args.n}-c{args.c}", dict(phi.source))
    if args.out:
        path = save_model(model, args.out)
        print(f"Model written to: {path}")
    else:
        print(to_json(emit_model(model)))
    return 0


def export_dot_cmd(args: argparse.Namespace) -> int:
    from app.io.dot import export_dot
    from app.io.model_file import load_model
    from app.stability.classify import classify

    model = load_model(args.model)
    written = export_dot(classify(model.phi, model.costs), args.out_dir)
    print(f"Wrote {len(written)} DOT files to: {args.out_dir}")
    return 0


def history_cmd(args: argparse.Namespace) -> int:
    from app.db.run_repo import list_runs
    from app.io.report import render_listing

    runs = list_runs(limit=args.limit, theorem=args.theorem)
    rows = [[r.id, r.created_at, r.theorem, r.model_name, r.n, r.ok, f"{r.failures}/{r.checks}"] for r in runs]
    print(render_listing("verification runs", ["id", "at", "theorem", "model", "n", "ok", "failed"], rows, args.format))
    return 0


def init_db_cmd(_args: argparse.Namespace) -> int:
    from app.db.init_db import init_db

    init_db()
    print("DB initialized: tables created (if not existed).")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="netconsent",
        description="Stability and equilibrium analysis of network formation with consent.",
    )
    p.add_argument("--format", choices=("table", "json"), default="table", help="Output format (default: table).")
    p.add_argument("--max-n", type=int, default=None, help="Raise the player cap for network enumeration.")
    p.add_argument("--jobs", type=int, default=None, help="Worker processes for randomized batches.")
    p.add_argument("--seed", type=int, default=None, help="Seed for randomized batches.")
    p.add_argument("--log-level", default=None, help="Log level (default: LOG_LEVEL or WARNING).")

    sub = p.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("classify", help="Classify every network of a model.")
    sp.add_argument("model", help="Model file (JSON).")
    sp.add_argument("--concepts", default="", help="Comma-separated concepts (default: all that apply).")
    sp.add_argument("--order", type=int, action="append", default=None, metavar="R",
                    help="Add a column for stability against coalitions of at most R players (repeatable).")
    sp.add_argument("--order-mode", choices=("jvdn", "dm"), default="jvdn",
                    help="Blocking rule for the order columns (default: jvdn).")
    sp.set_defaults(_handler=classify_cmd)

    sp = sub.add_parser("verify", help="Verify a theorem on a model or on random instances.")
    sp.add_argument("theorem", help="Theorem id, e.g. deletion-equivalence.")
    sp.add_argument("model", nargs="?", default="", help="Model file (JSON).")
    sp.add_argument("--random", type=int, default=0, metavar="K", help="Run on K seeded random instances.")
    sp.add_argument("--players", type=int, default=3, help="Players in random instances (default: 3).")
    sp.add_argument("--record", action="store_true", help="Store the run in the run ledger.")
    sp.set_defaults(_handler=verify_cmd)

    sp = sub.add_parser("equilibria", help="List networks supported by Nash equilibria.")
    sp.add_argument("model", help="Model file (JSON).")
    sp.add_argument("--variant", choices=("basic", "two-sided", "one-sided"), default="basic")
    sp.add_argument("--method", choices=("characterization", "direct", "both"), default="both")
    sp.set_defaults(_handler=equilibria_cmd)

    sp = sub.add_parser("potentials", help="Detect exact and ordinal potentials.")
    sp.add_argument("model", help="Model file (JSON).")
    sp.add_argument("--out", default="", help="Write the network potential table as JSON.")
    sp.set_defaults(_handler=potentials_cmd)

    sp = sub.add_parser("correlated", help="Evaluate a correlation device.")
    sp.add_argument("model", help="Model or game file (JSON).")
    sp.add_argument("device", help="Device file (JSON).")
    sp.add_argument("--mode", choices=("conditional", "ex-ante", "both"), default="both")
    sp.add_argument("--variant", choices=("basic", "two-sided"), default="basic",
                    help="Signalling game built from a network model (default: basic).")
    sp.set_defaults(_handler=correlated_cmd)

    sp = sub.add_parser("generate-trade", help="Write the costly trade model as a model file.")
    sp.add_argument("n", type=int, help="Number of players.")
    sp.add_argument("c", help="Link cost, e.g. 13/25.")
    sp.add_argument("--precision", type=int, default=None, help="Denominator bound for square roots.")
    sp.add_argument("--out", default="", help="Output path (default: print JSON).")
    sp.set_defaults(_handler=generate_trade_cmd)

    sp = sub.add_parser("export-dot", help="Write one DOT file per network.")
    sp.add_argument("model", help="Model file (JSON).")
    sp.add_argument("out_dir", help="Output directory.")
    sp.set_defaults(_handler=export_dot_cmd)

    sp = sub.add_parser("history", help="Show recorded verification runs.")
    sp.add_argument("--limit", type=int, default=20)
    sp.add_argument("--theorem", default=None)
    sp.set_defaults(_handler=history_cmd)

    sp = sub.add_parser("init-db", help="Initialize the run ledger (create tables).")
    sp.set_defaults(_handler=init_db_cmd)
    return p


def main(argv=None) -> int:
    load_dotenv()  # loads .env from project root

    args = build_parser().parse_args(argv)

    from sqlalchemy.exc import SQLAlchemyError

    from app.config import configure, settings
    from app.errors import NetconsentError
    from app.logging_setup import setup_logging

    configure(max_players=args.max_n, jobs=args.jobs, seed=args.seed)
    setup_logging(args.log_level or settings().log_level)
    if args.seed is None:
        args.seed = settings().seed
    if args.jobs is None:
        args.jobs = settings().jobs

    try:
        return args._handler(args)
    except (NetconsentError, OSError, json.JSONDecodeError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        return 2
    except SQLAlchemyError as e:
        print(f"ERROR: run ledger unavailable ({e.__class__.__name__}); run `init-db` first", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
