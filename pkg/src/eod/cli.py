"""Operator command line: serve, seed, export/import snapshots, moderate,
stats. Every command is a thin wrapper over one store/api operation; domain
errors surface verbatim as ``Name: detail`` on stderr with exit code 1."""

from __future__ import annotations

import dataclasses
import functools
import sys
from pathlib import Path

import click

from .errors import EodError
from .store import Decision, Store

DEFAULT_DATA_DIR = "./data"


def _surface_errors(fn):
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except EodError as exc:
            click.echo(f"{type(exc).__name__}: {exc}", err=True)
            sys.exit(1)
        except OSError as exc:
            click.echo(f"StorageFailure: {exc}", err=True)
            sys.exit(1)
    return wrapper


@click.group()
@click.option("--data-dir", envvar="EOD_DATA_DIR", default=DEFAULT_DATA_DIR,
              type=click.Path(path_type=Path), show_default=True,
              help="Store data directory.")
@click.pass_context
def main(ctx, data_dir: Path):
    """Self-hostable catalogue of Earth-observation datasets."""
    ctx.obj = data_dir


@main.command()
@click.option("--config", "config_path", type=click.Path(exists=True, path_type=Path),
              help="YAML config file; env vars override it.")
@click.option("--bind", default=None, help="host:port (overrides config)")
@click.pass_obj
@_surface_errors
def serve(data_dir: Path, config_path: Path | None, bind: str | None):
    """Run the HTTP service."""
    import uvicorn

    from .api import create_app
    from .config import load_config

    config = load_config(config_path)
    if bind:
        config = dataclasses.replace(config, bind=bind)
    if data_dir != Path(DEFAULT_DATA_DIR):
        config = dataclasses.replace(config, data_dir=data_dir)
    app = create_app(config)
    uvicorn.run(app, host=config.host, port=config.port, log_level="info")


@main.command()
@click.argument("fixture", required=False,
                type=click.Path(exists=True, path_type=Path))
@click.pass_obj
@_surface_errors
def seed(data_dir: Path, fixture: Path | None):
    """Load a pre-approved snapshot (bundled launch catalogue by default)."""
    from . import fixtures

    with Store(data_dir) as store:
        count = fixtures.seed_store(store, fixture)
    click.echo(f"seeded {count} records")


@main.command()
@click.argument("out", type=click.File("wb"))
@click.pass_obj
@_surface_errors
def export(data_dir: Path, out):
    """Write a snapshot to a file, or to stdout with '-'."""
    with Store(data_dir) as store:
        out.write(store.export_snapshot())


@main.command("import")
@click.argument("snapshot", type=click.File("rb"))
@click.option("--merge", is_flag=True,
              help="Allow importing into a non-empty store.")
@click.pass_obj
@_surface_errors
def import_(data_dir: Path, snapshot, merge: bool):
    """Read a snapshot from a file, or from stdin with '-'."""
    data = snapshot.read()
    with Store(data_dir) as store:
        count = store.import_snapshot(data, merge=merge)
    click.echo(f"imported {count} records")


@main.command()
@click.pass_obj
@_surface_errors
def stats(data_dir: Path):
    """Counts by status plus total views."""
    with Store(data_dir) as store:
        counts = store.stats()
    click.echo(f"approved: {counts['approved']}, pending: {counts['pending']}, "
               f"rejected: {counts['rejected']}")
    click.echo(f"views: {counts['views']}")


@main.group()
@click.option("--remote", default=None, metavar="URL",
              help="Operate through a running server's admin API.")
@click.option("--token", default=None, help="Moderator bearer token (with --remote).")
@click.option("--moderator", default="cli", show_default=True,
              help="Moderator label recorded in the audit log (local mode).")
@click.pass_context
def moderate(ctx, remote: str | None, token: str | None, moderator: str):
    """Review pending submissions. Local mode touches the data directory
    directly; stop the server first, or use --remote."""
    ctx.obj = {"data_dir": ctx.obj, "remote": remote, "token": token,
               "moderator": moderator}


@moderate.command("list")
@click.pass_obj
@_surface_errors
def moderate_list(opts):
    if opts["remote"]:
        for item in _remote(opts, "GET", "/api/admin/datasets?status=pending")["items"]:
            flags = ",".join(item["private"]["flags"]) or "-"
            click.echo(f"{item['id']}  {item['name']}  [{flags}]")
        return
    from .model import Status

    with Store(opts["data_dir"]) as store:
        pending = sorted((r for r in store.records() if r.status is Status.PENDING),
                         key=lambda r: r.id)
    for record in pending:
        flags = ",".join(sorted(record.flags)) or "-"
        click.echo(f"{record.id}  {record.name}  [{flags}]")


def _decide(opts, record_id: str, decision: Decision, reason: str | None):
    if opts["remote"]:
        action = "approve" if decision is Decision.APPROVE else "reject"
        body = {"reason": reason} if reason else None
        result = _remote(opts, "POST",
                         f"/api/admin/datasets/{record_id}/{action}", body)
        click.echo(f"{result['id']}: {result['status']}")
        return
    with Store(opts["data_dir"]) as store:
        status = store.moderate(record_id, decision, opts["moderator"], reason)
    click.echo(f"{record_id}: {status.value}")


@moderate.command()
@click.argument("record_id")
@click.pass_obj
@_surface_errors
def approve(opts, record_id: str):
    _decide(opts, record_id, Decision.APPROVE, None)


@moderate.command()
@click.argument("record_id")
@click.argument("reason", required=False)
@click.pass_obj
@_surface_errors
def reject(opts, record_id: str, reason: str | None):
    _decide(opts, record_id, Decision.REJECT, reason)


def _remote(opts, method: str, path: str, body=None) -> dict:
    import httpx

    from .errors import StorageFailure, Unauthorized

    headers = {}
    if opts["token"]:
        headers["Authorization"] = f"Bearer {opts['token']}"
    try:
        response = httpx.request(method, opts["remote"].rstrip("/") + path,
                                 headers=headers, json=body, timeout=10.0)
    except httpx.HTTPError as exc:
        raise StorageFailure(f"remote request failed: {exc}") from exc
    if response.status_code == 401:
        raise Unauthorized(response.text)
    if response.status_code >= 400:
        error, detail = "RemoteError", response.text
        if response.headers.get("content-type", "").startswith("application/json"):
            doc = response.json()
            error = doc.get("error", error)
            detail = doc.get("detail", detail)
        click.echo(f"{error}: {detail}", err=True)
        sys.exit(1)
    return response.json()


if __name__ == "__main__":
    main()
