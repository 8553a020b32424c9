"""Command-line interface.

Exit codes: 0 success / conforms / permit, 1 non-conforming / deny /
no match, 2 operational error (bad input, unreachable endpoint, usage).
"""

from __future__ import annotations

import sys
from pathlib import Path

import click

from .namespaces import ODRL
from .odrl import Outcome, PolicyError, UsageContext, evaluate, parse_policy
from .pid import (
    GND_DEFAULT_ENDPOINT,
    FixtureTransport,
    HttpSparqlTransport,
    PidError,
    SparqlEndpointConfig,
    resolve_pid,
)
from .pipeline import RepairExhaustedError, load_scenario, run_scenario, save_session
from .rdf import Iri, TurtleSyntaxError, parse_turtle
from .shacl import ShaclError, export_diagram, parse_shapes, validate as shacl_validate

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2


def _read_graph(path: str):
    try:
        return parse_turtle(Path(path).read_text(encoding="utf-8"))
    except FileNotFoundError:
        raise click.ClickException(f"file not found: {path}")
    except TurtleSyntaxError as exc:
        raise click.ClickException(f"{path}: {exc}")


class _Cli(click.Group):
    def main(self, *args, **kwargs):
        kwargs.setdefault("standalone_mode", False)
        try:
            return super().main(*args, **kwargs)
        except click.UsageError as exc:
            exc.show()
            sys.exit(EXIT_ERROR)
        except click.ClickException as exc:
            exc.show()
            sys.exit(EXIT_ERROR)
        except click.exceptions.Abort:
            sys.exit(EXIT_ERROR)


@click.group(cls=_Cli)
@click.version_option(package_name="fairmeta")
def main():
    """FAIR metadata toolkit: SHACL validation, ODRL policies, PID lookup, curator pipeline."""


@main.command()
@click.argument("data", type=click.Path())
@click.option("--shapes", "shapes_path", required=True, type=click.Path(), help="Shapes graph (Turtle).")
def validate(data: str, shapes_path: str):
    """Validate a data graph against SHACL shapes."""
    try:
        shapes = parse_shapes(_read_graph(shapes_path))
    except ShaclError as exc:
        raise click.ClickException(f"shapes are malformed: {exc}")
    report = shacl_validate(_read_graph(data), shapes)
    if report.conforms:
        click.echo("conforms")
        sys.exit(EXIT_OK)
    click.echo(f"does not conform: {len(report.violations)} violation(s)")
    for violation in report.violations:
        click.echo(f"- {violation.message}")
    sys.exit(EXIT_NEGATIVE)


@main.command("policy-eval")
@click.argument("policy_file", type=click.Path())
@click.option("--country", required=True, help="ISO 3166-1 alpha-2 code, e.g. DE.")
@click.option("--at", "timestamp", required=True, help="Usage instant, xsd:dateTime (UTC if no offset).")
@click.option("--action", default="use", show_default=True, help="ODRL action name or full IRI.")
@click.option("--target", default=None, help="Optional asset IRI to bind the request to.")
def policy_eval(policy_file: str, country: str, timestamp: str, action: str, target: str | None):
    """Evaluate a usage request against an ODRL policy."""
    try:
        policy = parse_policy(_read_graph(policy_file))
    except PolicyError as exc:
        raise click.ClickException(str(exc))
    action_iri = Iri(action) if Iri(action).is_absolute() else ODRL.term(action)
    try:
        ctx = UsageContext.of(country.strip(), timestamp, action_iri)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    decision = evaluate(policy, ctx, target=Iri(target) if target else None)
    click.echo(decision.outcome.value)
    for reason in decision.reasons:
        click.echo(f"- {reason}")
    sys.exit(EXIT_OK if decision.outcome is Outcome.PERMIT else EXIT_NEGATIVE)


@main.command("resolve-pid")
@click.argument("name")
@click.option("--endpoint", default=GND_DEFAULT_ENDPOINT, show_default=True, envvar="FAIRMETA_SPARQL_ENDPOINT")
@click.option(
    "--fixtures",
    "fixtures_dir",
    default=None,
    envvar="FAIRMETA_FIXTURES_DIR",
    help="Replay recorded SPARQL results from this directory instead of the network.",
)
@click.option("--timeout", default=30.0, show_default=True)
@click.option("--retries", default=2, show_default=True)
def resolve_pid_command(name: str, endpoint: str, fixtures_dir: str | None, timeout: float, retries: int):
    """Resolve a person name to GND identifiers."""
    cfg = SparqlEndpointConfig(endpoint_url=endpoint, timeout=timeout, retries=retries)
    transport = FixtureTransport(fixtures_dir) if fixtures_dir else HttpSparqlTransport()
    try:
        records = resolve_pid(name, cfg, transport)
    except ValueError as exc:
        raise click.ClickException(str(exc))
    except PidError as exc:
        raise click.ClickException(str(exc))
    if not records:
        click.echo("no match found")
        sys.exit(EXIT_NEGATIVE)
    for record in records:
        click.echo(f"{record.pid}\t{record.label}")
    sys.exit(EXIT_OK)


@main.command()
@click.argument("shapes_file", type=click.Path())
@click.option("--out", "out_path", default=None, type=click.Path(), help="Write to a file instead of stdout.")
def diagram(shapes_file: str, out_path: str | None):
    """Export a PlantUML class diagram of a shapes graph."""
    try:
        shapes = parse_shapes(_read_graph(shapes_file))
    except ShaclError as exc:
        raise click.ClickException(f"shapes are malformed: {exc}")
    text = export_diagram(shapes)
    if out_path:
        Path(out_path).write_text(text, encoding="utf-8")
        click.echo(f"wrote {out_path}")
    else:
        click.echo(text, nl=False)
    sys.exit(EXIT_OK)


@main.group()
def session():
    """Scripted end-to-end sessions."""


@session.command("run")
@click.argument("scenario_file", type=click.Path())
@click.option("--out", "out_dir", default="./sessions", show_default=True, help="Sessions directory.")
@click.option("--session-id", default=None, help="Fixed session id (defaults to a fresh one).")
def session_run(scenario_file: str, out_dir: str, session_id: str | None):
    """Run a scenario file end to end and persist the session."""
    try:
        scenario = load_scenario(scenario_file)
    except FileNotFoundError:
        raise click.ClickException(f"file not found: {scenario_file}")
    except (ValueError, KeyError) as exc:
        raise click.ClickException(f"bad scenario file: {exc}")
    try:
        session_obj, artifacts = run_scenario(scenario, session_id=session_id)
    except RepairExhaustedError as exc:
        click.echo("repair budget exhausted:", err=True)
        for finding in exc.findings:
            click.echo(f"- {finding}", err=True)
        sys.exit(EXIT_NEGATIVE)
    directory = save_session(session_obj, out_dir)
    click.echo(f"session {session_obj.id} complete")
    for name in sorted(p.name for p in directory.iterdir()):
        click.echo(f"- {directory / name}")
    sys.exit(EXIT_OK)


@main.command()
@click.option("--host", default=None, help="Bind address.")
@click.option("--port", default=None, type=int, help="Port.")
@click.option("--config", "config_file", default=None, type=click.Path(), help="JSON config file.")
@click.option("--sessions-dir", default=None, type=click.Path())
@click.option("--mode", default=None, type=click.Choice(["fixture", "live"]))
@click.option("--demo-fixtures", is_flag=True, help="Fixture mode wired to the packaged demo fixtures.")
@click.option("--ui-dir", default=None, type=click.Path(), help="Serve a built browser client at /ui.")
def serve(host, port, config_file, sessions_dir, mode, demo_fixtures, ui_dir):
    """Start the local HTTP service."""
    import uvicorn

    from .service import ConfigError, create_app, default_fixture_config, load_config

    try:
        if demo_fixtures:
            config = default_fixture_config(sessions_dir or "./sessions")
            if host:
                config.host = host
            if port:
                config.port = port
            if ui_dir:
                config.ui_dir = ui_dir
        else:
            config = load_config(
                config_file=config_file,
                overrides={
                    "host": host,
                    "port": port,
                    "sessions_dir": sessions_dir,
                    "mode": mode,
                    "ui_dir": ui_dir,
                },
            )
    except (ConfigError, FileNotFoundError) as exc:
        raise click.ClickException(str(exc))
    app = create_app(config)
    click.echo(f"fairmeta service on http://{config.host}:{config.port} ({config.mode} mode)")
    uvicorn.run(app, host=config.host, port=config.port, log_level="warning")


if __name__ == "__main__":
    main()
