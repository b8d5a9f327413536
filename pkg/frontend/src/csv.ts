/**
 * Minimal CSV reading for the simulator's output files: one header line,
 * comma separation, '.' decimals, no quoting.  Extra columns are fine;
 * missing ones are a schema error with an explicit diagnostic.
 */

export interface Table {
  path: string;
  columns: string[];
  /** column name -> values, row-aligned; non-numeric cells become NaN */
  data: Map<string, number[]>;
  /** raw string cells for non-numeric columns such as `note` */
  raw: Map<string, string[]>;
  rowCount: number;
}

export class SchemaError extends Error {}

export function parseCsv(text: string, path = "<string>"): Table {
  const lines = text.split(/\r?\n/).filter((l) => l.trim().length > 0);
  if (lines.length === 0) {
    throw new SchemaError(`${path}: file is empty (no header)`);
  }
  const columns = lines[0].split(",").map((c) => c.trim());
  if (lines.length === 1) {
    throw new SchemaError(`${path}: no data rows`);
  }
  const data = new Map<string, number[]>(columns.map((c) => [c, []]));
  const raw = new Map<string, string[]>(columns.map((c) => [c, []]));
  for (let i = 1; i < lines.length; i++) {
    const cells = lines[i].split(",");
    if (cells.length !== columns.length) {
      throw new SchemaError(
        `${path}: row ${i} has ${cells.length} cells, header has ${columns.length}`,
      );
    }
    columns.forEach((c, j) => {
      const cell = cells[j].trim();
      raw.get(c)!.push(cell);
      data.get(c)!.push(cell === "" ? NaN : Number(cell));
    });
  }
  return { path, columns, data, raw, rowCount: lines.length - 1 };
}

export function requireColumns(table: Table, needed: string[]): void {
  const missing = needed.filter((c) => !table.columns.includes(c));
  if (missing.length > 0) {
    throw new SchemaError(
      `${table.path}: missing column(s) ${missing.join(", ")}; ` +
        `found: ${table.columns.join(", ")}`,
    );
  }
}

export function column(table: Table, name: string): number[] {
  const values = table.data.get(name);
  if (!values) {
    throw new SchemaError(`${table.path}: no column ${name}`);
  }
  return values;
}
