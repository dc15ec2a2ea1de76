import csv
import io
import json
import logging

from unitarylm.foundation import canonical_json
from unitarylm.harness.report import FAIL, PASS

logger = logging.getLogger(__name__)

ELEMENT_COLUMNS = ('group', 'rank', 's', 'I', 'set', 'cardinality', 'element')
REPORT_COLUMNS = ('claim', 'label', 'parameters', 'verdict', 'cardinalities', 'counterexample', 'seed',
                  'elapsed_ms')


def reports_payload(reports):
    """The JSON document written by 'verify'.

    Args:
        reports (list): VerificationReports or their as_dict() forms.

    Returns:
        dict
    """
    rows = [r if isinstance(r, dict) else r.as_dict() for r in reports]
    verdict = FAIL if any(row['verdict'] == FAIL for row in rows) else PASS
    return {'verdict': verdict, 'reports': rows}


def is_reports_payload(payload):
    return isinstance(payload, dict) and 'reports' in payload


def _cell(value):
    if value is None:
        return ''
    if isinstance(value, (dict, list)):
        return canonical_json(value)
    return str(value)


def render_json(payload):
    return json.dumps(payload, sort_keys=True, indent=2) + '\n'


def render_csv(payload):
    """One row per element for an enumeration result, one row per report otherwise."""
    handle = io.StringIO()
    writer = csv.writer(handle, lineterminator='\n')
    if is_reports_payload(payload):
        writer.writerow(REPORT_COLUMNS)
        for row in payload['reports']:
            writer.writerow([_cell(row.get(column)) for column in REPORT_COLUMNS])
    else:
        writer.writerow(ELEMENT_COLUMNS)
        head = [payload['group'], payload['m_or_N'], _cell(payload.get('s')),
                ','.join(str(i) for i in payload['I']), payload['set'], payload['cardinality']]
        for element in payload['elements']:
            writer.writerow(head + [element])
    return handle.getvalue()


def _table(header, rows):
    widths = [max(len(str(cell)) for cell in column) for column in zip(header, *rows)]
    lines = []
    for row in [header] + rows:
        lines.append('  '.join(str(cell).ljust(width) for cell, width in zip(row, widths)).rstrip())
        if row is header:
            lines.append('  '.join('-' * width for width in widths))
    return '\n'.join(lines) + '\n'


def render_table(payload):
    """A fixed-width table: one row per (claim, parameters), or a header plus the elements."""
    if is_reports_payload(payload):
        rows = []
        for row in payload['reports']:
            sizes = ' '.join('{}={}'.format(k, v) for k, v in sorted(row.get('cardinalities', {}).items()))
            rows.append([row['claim'], row.get('label', ''), _cell(row['parameters']), row['verdict'], sizes])
        header = ['claim', 'label', 'parameters', 'verdict', 'sizes']
        return _table(header, rows) + 'overall: {}\n'.format(payload['verdict'])
    title = '{}({}) I={} set={}{}{}{}'.format(
        payload['group'], payload['m_or_N'], ','.join(str(i) for i in payload['I']), payload['set'],
        '' if payload.get('s') is None else ' s={}'.format(payload['s']),
        '' if payload.get('mu') is None else ' mu={}'.format(','.join(str(x) for x in payload['mu'])),
        ' double' if payload.get('double') else '')
    rows = [[index, element] for index, element in enumerate(payload['elements'], 1)]
    return '{}\ncardinality: {}\n'.format(title, payload['cardinality']) + _table(['#', 'element'], rows)


RENDERERS = {
    'json': render_json,
    'csv': render_csv,
    'table': render_table
}


def render(payload, output_format):
    return RENDERERS[output_format](payload)


def write_output(text, path=None, stream=None):
    """Writes to `path`, or to `stream` when no path is given.

    Raises:
        OSError: If the path cannot be written.
    """
    if path is None:
        stream.write(text)
        return
    with open(path, 'w', newline='') as handle:
        handle.write(text)
    logger.info('Wrote %s', path)
