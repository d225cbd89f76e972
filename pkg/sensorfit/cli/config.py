"""CLI commands for global configuration management."""

import typer

from sensorfit import global_config
from sensorfit.cli.utils import error_boundary

# Subcommand group for configuration management
config_app = typer.Typer(
    name="config",
    help="Manage sensorfit defaults in ~/.sensorfit/config.yaml",
    add_completion=False,
)


@config_app.command("show")
def config_show() -> None:
    """Show the effective defaults and where each comes from."""
    with error_boundary():
        if not global_config.is_configured():
            typer.echo("No configuration found; using built-in defaults. Run 'sensorfit config init' to create one.")
        else:
            typer.echo(f"Current sensorfit configuration ({global_config.get_config_file_path()}):")
        typer.echo()

        stored = global_config.load_global_config()
        for section, keys in global_config.KNOWN_KEYS.items():
            typer.echo(f"  {section}:")
            for key in keys:
                value = global_config.get_value(f"{section}.{key}")
                source = "config" if key in (stored.get(section) or {}) else "default"
                typer.echo(f"    {key}: {value}  ({source})")


@config_app.command("init")
def config_init(
    force: bool = typer.Option(False, "--force", "-f", help="Overwrite an existing config.yaml"),
) -> None:
    """Write config.yaml populated with the built-in defaults."""
    with error_boundary():
        path = global_config.get_config_file_path()
        if global_config.is_configured() and not force:
            typer.echo(f"{path} already exists; use --force to overwrite.", err=True)
            raise typer.Exit(1)
        global_config.save_global_config(global_config.default_config())
        typer.echo(f"✓ Wrote {path}")


@config_app.command("set")
def config_set(
    key: str = typer.Argument(..., help="Dotted key, e.g. train.epochs or predict.points"),
    value: str = typer.Argument(..., help="New value"),
) -> None:
    """Set one default in config.yaml."""
    with error_boundary():
        stored = global_config.set_value(key, value)
        typer.echo(f"✓ {key} = {stored}")
