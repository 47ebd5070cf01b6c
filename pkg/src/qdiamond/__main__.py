from qdiamond.cli import run

run()
