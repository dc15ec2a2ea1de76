import importlib
import inspect
import os
import re

SUBPACKAGES = ['weyl', 'bruhat', 'faces', 'permissibility', 'spin', 'harness', 'cli']

SECTIONS = ('Args', 'Returns', 'Raises', 'Examples')


def split_sections(docstring):
    """Splits a Google style docstring into its summary and named sections."""
    sections = {'summary': []}
    current = 'summary'
    for line in inspect.cleandoc(docstring or '').split('\n'):
        header = line.strip().rstrip(':')
        if line.strip().endswith(':') and header in SECTIONS:
            current = header
            sections[current] = []
            continue
        sections[current].append(line)
    return dict((key, '\n'.join(lines).strip()) for key, lines in sections.items())


def format_args(string, f):
    f.write('\n## Args\n\n|arg|type|description|\n|:---:|:---:|:---:|\n')

    for arg in re.findall(r'^\s*(\w+)\s*\(([\w\s,]+)\):\s*(.*)$', string, re.MULTILINE):
        f.write('|{}|{}|{}|\n'.format(*arg))


def format_returns(string, f):
    f.write('\n## Returns\n{}\n'.format(string))


def format_raises(string, f):
    if not string or 'N/A' in string:
        f.write('\n## Raises\nN/A\n')
        return

    f.write('\n## Raises\n\n|exception type|reason|\n|:---:|:---:|\n')

    for name, reason in re.findall(r'^\s*(\w+):\s*(.*)$', string, re.MULTILINE):
        f.write('|{}|{}|\n'.format(name, reason))


def format_examples(string, f):
    f.write('\n## Examples\n')
    f.write('```python\n{}\n```\n'.format(string))


def format_methods(obj, f):
    methods = [name for name, _ in inspect.getmembers(obj, inspect.isfunction) if not name.startswith('_')]
    if not methods:
        return

    f.write('\n## Methods\n')

    for name in methods:
        f.write('\n---\n### `{}()`\n'.format(name))
        f.write('\n```\n{}\n```\n'.format(inspect.cleandoc(getattr(obj, name).__doc__ or '')))


def main(subpackage):
    module = importlib.import_module('unitarylm.{}'.format(subpackage))
    directory = './docs/{}'.format(module.__name__)
    if not os.path.exists(directory):
        os.makedirs(directory)

    for name in module.__all__:
        obj = getattr(module, name)
        if not (inspect.isclass(obj) or inspect.isfunction(obj)):
            continue
        sections = split_sections(obj.__doc__)
        kind = 'class' if inspect.isclass(obj) else 'function'

        with open('{}/{}.md'.format(directory, name), 'w') as f:
            f.write('# **{}** `{}.{}()`\n'.format(kind, module.__name__, name))
            if sections['summary']:
                f.write('\n{}\n'.format(sections['summary']))
            if 'Args' in sections:
                format_args(sections['Args'], f)
            if 'Returns' in sections:
                format_returns(sections['Returns'], f)
            if 'Raises' in sections or 'Args' in sections:
                format_raises(sections.get('Raises'), f)
            if 'Examples' in sections:
                format_examples(sections['Examples'], f)
            if inspect.isclass(obj):
                format_methods(obj, f)


if __name__ == '__main__':
    for subpackage in SUBPACKAGES:
        main(subpackage)
