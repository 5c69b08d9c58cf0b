"""
数据集读写 - JSON / CSV 文件格式，以及文本语料的读取

JSON: {"d": 1, "series": [{"label": "A", "samples": [{"t": 0.0, "v": [1.0]}, ...]}, ...]}
CSV (仅 d=1): 表头 "label,t,v"，每行一个样本，按标签分组，组内按时间戳顺序
"""
import csv
import io
import json
import logging
from enum import Enum
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError

from ..types import DataValidationError, Dataset, DimensionMismatch, ParseError, TevsError, TimeSeries
from .validation import SMALLEST_POSITIVE, sanitize, validate

logger = logging.getLogger(__name__)

PathLike = Union[str, Path]

CSV_HEADER = ["label", "t", "v"]


class DataFormat(str, Enum):
    """数据文件格式"""
    JSON = "json"
    CSV = "csv"


class SampleRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")
    t: float
    v: List[float]


class SeriesRecord(BaseModel):
    model_config = ConfigDict(extra="forbid")
    label: Optional[str] = None
    samples: List[SampleRecord] = Field(default_factory=list)


class DatasetDocument(BaseModel):
    model_config = ConfigDict(extra="forbid")
    d: int = Field(default=1, ge=1)
    series: List[SeriesRecord] = Field(default_factory=list)


class CsvRow(BaseModel):
    label: str
    t: float
    v: float


class CorpusRecord(BaseModel):
    id: Optional[str] = None
    text: str


def infer_format(path: PathLike, format: Optional[str] = None) -> DataFormat:
    """按显式参数或文件后缀确定格式，默认 JSON"""
    if format:
        return DataFormat(format)
    if Path(path).suffix.lower() == ".csv":
        return DataFormat.CSV
    return DataFormat.JSON


def _first_error(error: ValidationError) -> Tuple[str, Optional[int]]:
    detail = error.errors()[0]
    location = detail.get("loc", ())
    index = next((part for part in location if isinstance(part, int)), None)
    path = ".".join(str(part) for part in location)
    return f"{path}: {detail.get('msg')}", index


def _to_series(rows, dimension, label, use_sanitize, epsilon) -> TimeSeries:
    if use_sanitize:
        return sanitize(rows, epsilon=epsilon, dimension=dimension, label=label)
    return validate(rows, dimension=dimension, label=label)


def loads(text: str, format: Union[str, DataFormat] = DataFormat.JSON,
          use_sanitize: bool = False, epsilon: float = SMALLEST_POSITIVE) -> Dataset:
    """从字符串解析数据集"""
    data_format = DataFormat(format)
    if not text.strip():
        return Dataset()
    if data_format == DataFormat.CSV:
        return _loads_csv(text, use_sanitize, epsilon)
    return _loads_json(text, use_sanitize, epsilon)


def _loads_json(text: str, use_sanitize: bool, epsilon: float) -> Dataset:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"JSON 语法错误: {e.msg}", position=e.lineno)
    try:
        document = DatasetDocument.model_validate(raw)
    except ValidationError as e:
        message, index = _first_error(e)
        raise ParseError(f"JSON 结构错误: {message}", position=index)

    series = []
    for k, record in enumerate(document.series):
        label = record.label if record.label is not None else str(k)
        rows = [(s.v, s.t) for s in record.samples]
        try:
            series.append(_to_series(rows, document.d, label, use_sanitize, epsilon))
        except TevsError as e:
            if e.position is None:
                e.position = k
            raise
    labels = None
    if any(record.label is not None for record in document.series):
        labels = tuple(record.label if record.label is not None else str(k)
                       for k, record in enumerate(document.series))
    return Dataset(tuple(series), labels, document.d)


def _loads_csv(text: str, use_sanitize: bool, epsilon: float) -> Dataset:
    reader = csv.reader(io.StringIO(text))
    header = next(reader, None)
    if header is None:
        return Dataset()
    if [h.strip() for h in header] != CSV_HEADER:
        raise ParseError(f"CSV 表头应为 {','.join(CSV_HEADER)}，实际为 {','.join(header)}", position=1)

    groups: Dict[str, List[Tuple[float, float]]] = {}
    row_lines: Dict[str, List[int]] = {}
    for row in reader:
        if not row or all(not cell.strip() for cell in row):
            continue
        if len(row) != len(CSV_HEADER):
            raise ParseError(f"CSV 行应有 {len(CSV_HEADER)} 列，实际 {len(row)} 列", position=reader.line_num)
        try:
            label, t, v = row
            record = CsvRow.model_validate({"label": label, "t": t.strip(), "v": v.strip()})
        except ValidationError as e:
            message, _ = _first_error(e)
            raise ParseError(f"CSV 行无法解析: {message}", position=reader.line_num)
        groups.setdefault(record.label, []).append((record.v, record.t))
        row_lines.setdefault(record.label, []).append(reader.line_num)

    series = []
    for label, rows in groups.items():
        try:
            series.append(_to_series(rows, 1, label, use_sanitize, epsilon))
        except TevsError as e:
            # 样本序号换算为文件行号
            if e.position is not None:
                e.position = row_lines[label][e.position]
            raise
    return Dataset(tuple(series), tuple(groups.keys()), 1)


def load(path: PathLike, format: Optional[str] = None, use_sanitize: bool = False,
         epsilon: float = SMALLEST_POSITIVE) -> Dataset:
    """
    读取数据集文件

    Args:
        path: 文件路径
        format: json 或 csv，None 时按后缀推断
        use_sanitize: 是否把零坐标替换为 epsilon
        epsilon: 替换值

    Returns:
        Dataset: 数据集
    """
    data_format = infer_format(path, format)
    text = Path(path).read_text(encoding="utf-8")
    dataset = loads(text, data_format, use_sanitize, epsilon)
    logger.info(f"📂 已读取 {path}: {len(dataset)} 条序列 (d={dataset.dimension}, {data_format.value})")
    return dataset


def dumps(dataset: Dataset, format: Union[str, DataFormat] = DataFormat.JSON) -> str:
    """把数据集序列化为字符串；浮点数使用 repr 保证按位往返"""
    data_format = DataFormat(format)
    if data_format == DataFormat.JSON:
        return json.dumps(dataset.to_dict(), separators=(",", ":"))
    if dataset.dimension != 1:
        raise DimensionMismatch(f"CSV 格式只支持 d=1，当前 d={dataset.dimension}")
    labels = dataset.resolved_labels
    seen = set()
    for k, (label, ts) in enumerate(zip(labels, dataset.series)):
        # 每行一个样本：空序列和重名标签在 CSV 中无法还原
        if ts.is_empty:
            raise DataValidationError("CSV 格式无法表示空序列", series=label, position=k)
        if label in seen:
            raise DataValidationError("CSV 格式要求标签互不相同", series=label, position=k)
        seen.add(label)

    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(CSV_HEADER)
    for label, ts in zip(labels, dataset.series):
        writer.writerows([label, repr(sample.timestamp), repr(sample.value[0])] for sample in ts.samples)
    return buffer.getvalue()


def store(dataset: Dataset, path: PathLike, format: Optional[str] = None) -> None:
    """写出数据集文件"""
    data_format = infer_format(path, format)
    Path(path).write_text(dumps(dataset, data_format), encoding="utf-8")
    logger.info(f"💾 已写出 {path}: {len(dataset)} 条序列 ({data_format.value})")


def load_corpus(path: PathLike) -> Tuple[List[str], List[str]]:
    """
    读取文本语料：目录 (每个 .txt 文件一篇，按文件名排序) 或 JSONL ({"id", "text"})

    Returns:
        (文档标识列表, 文本列表)
    """
    source = Path(path)
    if source.is_dir():
        files = sorted(p for p in source.iterdir() if p.is_file() and p.suffix.lower() == ".txt")
        return [p.name for p in files], [p.read_text(encoding="utf-8") for p in files]

    ids, texts = [], []
    for line_no, line in enumerate(source.read_text(encoding="utf-8").splitlines(), 1):
        if not line.strip():
            continue
        try:
            record = CorpusRecord.model_validate_json(line)
        except ValidationError as e:
            message, _ = _first_error(e)
            raise ParseError(f"语料记录无法解析: {message}", position=line_no)
        ids.append(record.id if record.id is not None else str(len(ids)))
        texts.append(record.text)
    return ids, texts
