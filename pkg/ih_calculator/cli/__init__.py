"""CLI commands for the ih_calculator package."""
import typer

app = typer.Typer(add_completion=False, pretty_exceptions_show_locals=False)

__all__ = ["app"]
