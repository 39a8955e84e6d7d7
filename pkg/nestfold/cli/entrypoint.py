"""
Console script: `nestfold <derive|emit|eval|check|corpus> ...` without manage.py.
"""
import os
import sys


def main(argv: list[str] | None = None) -> None:
    """Run the nestfold management command; usage and command errors exit with their return code."""
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings.local")

    from django.core.management import ManagementUtility  # noqa: PLC0415

    args = sys.argv[1:] if argv is None else argv
    ManagementUtility(["nestfold", "nestfold", *args]).execute()


if __name__ == "__main__":
    main()
