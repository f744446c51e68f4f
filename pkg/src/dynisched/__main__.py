"""Entry point for running dynisched as a module: python -m dynisched."""

from dynisched.cli.app import app

if __name__ == "__main__":
    app()
