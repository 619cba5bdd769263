"""Verify subcommand for quartaut CLI."""

from sys import exit

from click import UsageError, argument, option, pass_context

from . import dump, err, main
from ..atlas import CHECKS, UnknownCatalogId, resolve_check, run_all, theorem_check


@main.command
@pass_context
@option("-a", "--all", "run_every", is_flag=True, help="Run every registered check")
@option("-l", "--list", "list_", is_flag=True, help="List registered checks with their aliases and conductors")
@option("-s", "--slow", is_flag=True, help="With --all, include checks marked slow")
@argument("ids", nargs=-1)
def verify(ctx, run_every: bool, list_: bool, slow: bool, ids: tuple[str, ...]):
    """Run exact checks by id or alias, printing JSON reports.

    Exits 1 if any check fails and 2 on an unknown id.

    \b
        quartaut verify thm_6_1
        quartaut verify --all
        quartaut verify --list
    """
    log = ctx.obj["log"]
    if list_:
        dump([CHECKS[id].to_json() for id in sorted(CHECKS)])
        return
    if run_every == bool(ids):
        raise UsageError("Provide either check ids or --all")
    if run_every:
        reports = run_all(log, slow)
        dump({
            'status': 'failed' if any(not r.ok for r in reports) else 'verified',
            'reports': [r.to_json() for r in reports],
        })
    else:
        try:
            for id in ids:
                resolve_check(id)
        except UnknownCatalogId as e:
            raise UsageError(str(e)) from e
        reports = [theorem_check(id, log) for id in ids]
        dump(reports[0].to_json() if len(reports) == 1 else [r.to_json() for r in reports])
    failed = [r.id for r in reports if not r.ok]
    if failed:
        err(f"Failed: {', '.join(failed)}")
        exit(1)
