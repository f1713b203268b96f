"""Unified entry point: loads the env file, sets up logging and hands off to the basechange CLI.

    python start.py check all --file instances/bundled/bundle.inst
    python start.py report instances/bundled/bundle.inst --format json
"""
import logging
import os

# Load env file BEFORE any other project imports so engine.config sees the bounds.
from dotenv import load_dotenv
load_dotenv(os.getenv("ENV_FILE", ".env"), override=True)

from cli.main import basechange

logging.basicConfig(
    format="%(asctime)s [%(levelname)s] %(name)s: %(message)s",
    level=logging.INFO,
)
logger = logging.getLogger(__name__)


if __name__ == "__main__":
    basechange(prog_name="basechange")
