"""Allow running sensorfit as a module: python -m sensorfit"""

from sensorfit.cli import app

if __name__ == "__main__":
    app()
