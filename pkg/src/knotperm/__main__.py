import sys


def main():
    from knotperm import cli

    sys.exit(cli.run_cli(sys.argv))


if __name__ == "__main__":
    main()
