# MIT License
#
# Copyright (c) 2024 rotbox-metrics authors
#
# Permission is hereby granted, free of charge, to any person obtaining a copy
# of this software and associated documentation files (the "Software"), to deal
# in the Software without restriction, including without limitation the rights
# to use, copy, modify, merge, publish, distribute, sublicense, and/or sell
# copies of the Software, and to permit persons to whom the Software is
# furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included in all
# copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL THE
# AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER
# LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING FROM,
# OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR OTHER DEALINGS IN THE
# SOFTWARE.

import logging
import sys

import click

from rotbox.cli.bench import bench
from rotbox.cli.evaluate import evaluate
from rotbox.cli.gradcheck import gradcheck
from rotbox.cli.matrix import matrix
from rotbox.cli.metric import metric
from rotbox.cli.simulate import simulate
from rotbox.config_utils import load_config_file
from rotbox.errors import ConfigError, DataError, NumericError

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_NUMERIC = 3


@click.group(context_settings=dict(help_option_names=['-h', '--help']))
@click.version_option(version='0.1.0')
@click.option('--seed', default=None, type=int, help='Seed for every random draw; overrides the config file.')
@click.option('--config', 'config_path', default=None, type=str,
              help='Flat key = value file of simulation settings.')
@click.option('--out', default='-', show_default=True, type=str, help='The output CSV file. - is stdout.')
@click.pass_context
def cli(ctx, seed, config_path, out):
    ctx.ensure_object(dict)
    ctx.obj.update(seed=seed, config=load_config_file(config_path), out=out)


# metrics
cli.add_command(metric, "metric")
cli.add_command(matrix, "matrix")

# evaluation
cli.add_command(evaluate, "eval")

# regression
cli.add_command(simulate, "simulate")
cli.add_command(gradcheck, "gradcheck")
cli.add_command(bench, "bench")


def main(args=None):
    """Runs the CLI and maps failures to exit codes: 1 usage, 2 data, 3 numeric."""
    logger = logging.getLogger('rotbox')
    try:
        cli.main(args=args, prog_name='rotbox', standalone_mode=False)
    except click.exceptions.Abort:
        click.echo('Aborted!', err=True)
        return EXIT_USAGE
    except click.ClickException as e:
        e.show()
        return EXIT_USAGE
    except ConfigError as e:
        logger.error(str(e))
        return EXIT_USAGE
    except (DataError, OSError) as e:
        logger.error(str(e))
        return EXIT_DATA
    except NumericError as e:
        logger.error(str(e))
        return EXIT_NUMERIC
    return EXIT_OK


def run():
    sys.exit(main())
