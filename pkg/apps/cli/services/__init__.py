from .runner import SUBCOMMANDS, command_name, run, usage

__all__ = ['SUBCOMMANDS', 'command_name', 'run', 'usage']
