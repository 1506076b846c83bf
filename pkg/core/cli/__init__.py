from core.cli.main import build_parser, main
