"""
Entry point for ``python -m mixsolver``
"""
from mixsolver.cli import main

if __name__ == "__main__":
    main()
