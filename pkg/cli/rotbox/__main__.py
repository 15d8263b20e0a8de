from rotbox.cli import run

run()
