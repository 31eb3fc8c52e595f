"""
Z4 Two-Chain Poset Codes
Main entry point for the command-line tool.
"""
import sys

from dotenv import find_dotenv, load_dotenv

# Load environment variables before settings are read
load_dotenv(find_dotenv())

from app.cli import main as cli_main  # noqa: E402
from utils.logger import setup_logging  # noqa: E402

# Setup logging
logger = setup_logging()


def main() -> int:
    """Main function to run one command-line invocation."""
    try:
        return cli_main()
    except Exception as e:
        logger.error(f"Unexpected failure: {str(e)}")
        raise


if __name__ == "__main__":
    sys.exit(main())
