import sys

from src.cli.comandos import cli_dispatch


def main():
    """Función principal de la aplicación."""
    sys.exit(cli_dispatch(sys.argv[1:]))


if __name__ == "__main__":
    main()
