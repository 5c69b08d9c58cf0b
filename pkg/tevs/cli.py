"""
命令行前端 - ip / dist / gram / gs / gen / textsim 子命令

报告写到标准输出 (每行一个 JSON 或标量)，诊断信息经 logging 写到标准错误。
退出码: 0 成功, 2 用法错误, 3 数据校验错误, 4 数值错误
"""
import argparse
import json
import logging
import sys
from pathlib import Path
from typing import List, Optional, TextIO

import numpy as np

from .config import Settings
from .kernel import gram, psd_check
from .ortho import gram_schmidt, sincos_family, spike_family
from .series import DataFormat, dumps, infer_format, load, load_corpus, random_dataset, store
from .tep import distance, product
from .textsim import idf, rank, tokenize
from .types import (
    DataValidationError, Dataset, GramMatrix, KernelType, NumericError, TevsError,
    TimeSeries, Variant
)

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_DATA = 3
EXIT_NUMERIC = 4

KERNEL_CHOICES = {
    "teip": KernelType.TEIP,
    "gauss": KernelType.GAUSSIAN_DISTANCE,
    "cosine": KernelType.ELASTIC_COSINE,
}


class UsageError(Exception):
    """参数组合不合法"""
    pass


def format_scalar(value: float) -> str:
    """17 位有效数字，保证往返"""
    return format(value, ".17g")


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    """构建参数解析器；全局参数放在公共父解析器里，写在子命令之后"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--sanitize", action="store_true", help="读取时把零坐标替换为 --eps")
    common.add_argument("--eps", type=float, default=settings.epsilon, help="零值替换 ε (默认 2^-1074)")
    common.add_argument("--format", choices=[f.value for f in DataFormat], default=None,
                        help="写出的数据 / 矩阵格式，缺省按 --out 后缀推断，标准输出为 json")
    common.add_argument("--seed", type=int, default=0, help="随机数据生成的种子")
    common.add_argument("--jobs", type=int, default=settings.max_concurrent, help="批量核值并发数")
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v INFO, -vv DEBUG")

    nu_help = f"时间刚度 ν (默认 {settings.nu})"
    parser = argparse.ArgumentParser(prog="tevs", description="时间弹性向量空间工具")
    commands = parser.add_subparsers(dest="command", required=True)

    ip = commands.add_parser("ip", parents=[common], help="两条序列的时间弹性乘积")
    ip.add_argument("a")
    ip.add_argument("b")
    ip.add_argument("--nu", type=float, default=settings.nu, help=nu_help)
    ip.add_argument("--variant", choices=[Variant.TEIP.value, Variant.TWIP1.value, Variant.TWIP2.value],
                    default=Variant.TEIP.value)

    dist = commands.add_parser("dist", parents=[common], help="弹性距离 ||A ⊖ B||")
    dist.add_argument("a")
    dist.add_argument("b")
    dist.add_argument("--nu", type=float, default=settings.nu, help=nu_help)

    gm = commands.add_parser("gram", parents=[common], help="Gram 矩阵与 PSD 报告")
    gm.add_argument("data")
    gm.add_argument("--nu", type=float, default=settings.nu, help=nu_help)
    gm.add_argument("--kernel", choices=list(KERNEL_CHOICES), default="teip")
    gm.add_argument("--gamma", type=float, default=None, help="高斯核带宽 γ")
    gm.add_argument("--psd-check", action="store_true")
    gm.add_argument("--tol", type=float, default=1e-8)
    gm.add_argument("--out", default=None, help="矩阵输出文件，缺省写到标准输出")

    gs = commands.add_parser("gs", parents=[common], help="Gram-Schmidt 正交化")
    gs.add_argument("family")
    gs.add_argument("--nu", type=float, default=settings.nu, help=nu_help)
    gs.add_argument("--normalize", action="store_true")
    gs.add_argument("--tol", type=float, default=1e-10)
    gs.add_argument("--out", default=None, help="正交基输出文件，缺省写到标准输出")

    gen = commands.add_parser("gen", parents=[common], help="生成实验序列族")
    gen.add_argument("family", choices=["spikes", "sincos", "random"])
    gen.add_argument("--n", type=int, default=11, help="spikes / random 的序列条数")
    gen.add_argument("--len", dest="length", type=int, default=128, help="sincos 的序列长度")
    gen.add_argument("--max-len", type=int, default=30, help="random 的最大长度")
    gen.add_argument("--dim", type=int, default=1, help="random 的空间维度")
    gen.add_argument("--out", default=None, help="输出文件，缺省写到标准输出")

    ts = commands.add_parser("textsim", parents=[common], help="弹性余弦文本排序")
    ts.add_argument("--corpus", required=True, help="目录 (*.txt) 或 JSONL 文件")
    ts.add_argument("--query", required=True, help="查询字符串或查询文件")
    ts.add_argument("--nu", type=float, default=settings.nu, help=nu_help)
    ts.add_argument("--weights", choices=["binary", "idf"], default="binary")

    return parser


def _load(path: str, args: argparse.Namespace) -> Dataset:
    return load(path, use_sanitize=args.sanitize, epsilon=args.eps)


def _load_single(path: str, args: argparse.Namespace) -> TimeSeries:
    dataset = _load(path, args)
    if len(dataset) != 1:
        raise DataValidationError(f"{path} 应恰好包含一条序列，实际 {len(dataset)} 条")
    return dataset.series[0]


def _output_format(args: argparse.Namespace) -> DataFormat:
    if args.out:
        return infer_format(args.out, args.format)
    return DataFormat(args.format or DataFormat.JSON.value)


def _emit_dataset(dataset: Dataset, args: argparse.Namespace, out: TextIO) -> None:
    if args.out:
        store(dataset, args.out, args.format)
    else:
        out.write(dumps(dataset, _output_format(args)).rstrip("\n") + "\n")


def _matrix_text(matrix: GramMatrix, data_format: DataFormat) -> str:
    if data_format == DataFormat.JSON:
        return json.dumps(matrix.to_dict(), separators=(",", ":")) + "\n"
    lines = [",".join(matrix.labels)]
    lines.extend(",".join(repr(float(v)) for v in row) for row in matrix.values)
    return "\n".join(lines) + "\n"


def _report(payload: dict, out: TextIO) -> None:
    out.write(json.dumps(payload, separators=(",", ":")) + "\n")


def _cmd_ip(args: argparse.Namespace, out: TextIO) -> None:
    a, b = _load_single(args.a, args), _load_single(args.b, args)
    out.write(format_scalar(product(a, b, args.nu, Variant(args.variant))) + "\n")


def _cmd_dist(args: argparse.Namespace, out: TextIO) -> None:
    a, b = _load_single(args.a, args), _load_single(args.b, args)
    out.write(format_scalar(distance(a, b, args.nu)) + "\n")


def _cmd_gram(args: argparse.Namespace, out: TextIO) -> None:
    kernel_tag = KERNEL_CHOICES[args.kernel]
    if kernel_tag == KernelType.GAUSSIAN_DISTANCE and args.gamma is None:
        raise UsageError("--kernel gauss 需要 --gamma")
    matrix = gram(_load(args.data, args), kernel_tag, args.nu, args.gamma, max_concurrent=args.jobs)
    text = _matrix_text(matrix, _output_format(args))
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        out.write(text)
    if args.psd_check:
        report = psd_check(matrix, args.tol)
        if not report.psd:
            logger.warning(f"⚠️ Gram 矩阵未通过 PSD 检查: λ_min={report.min_eigenvalue:.6e}")
        _report(report.to_dict(), out)


def _cmd_gs(args: argparse.Namespace, out: TextIO) -> None:
    family = _load(args.family, args)
    result = gram_schmidt(list(family.series), args.nu, args.tol, args.normalize)
    _emit_dataset(Dataset.of(result.basis), args, out)
    _report(result.to_dict(), out)


def _cmd_gen(args: argparse.Namespace, out: TextIO) -> None:
    if args.family == "spikes":
        dataset = Dataset.of(spike_family(args.n, args.eps))
    elif args.family == "sincos":
        dataset = Dataset.of(sincos_family(args.length, args.eps))
    else:
        rng = np.random.default_rng(args.seed)
        dataset = random_dataset(rng, args.n, max_length=args.max_len, dimension=args.dim)
    _emit_dataset(dataset, args, out)


def _query_text(query: str) -> str:
    """--query 指向已存在的文件时读取文件内容，否则按查询字符串处理"""
    try:
        is_file = Path(query).is_file()
    except (OSError, ValueError):
        # 过长或含 NUL 的字符串不可能是路径
        is_file = False
    return Path(query).read_text(encoding="utf-8") if is_file else query


def _cmd_textsim(args: argparse.Namespace, out: TextIO) -> None:
    ids, texts = load_corpus(args.corpus)
    query_text = _query_text(args.query)
    corpus = [tokenize(text) for text in texts]
    weights = idf(corpus) if args.weights == "idf" else None
    for index, score in rank(tokenize(query_text), corpus, args.nu, weights, max_concurrent=args.jobs):
        _report({"doc": ids[index], "score": score}, out)


COMMANDS = {
    "ip": _cmd_ip,
    "dist": _cmd_dist,
    "gram": _cmd_gram,
    "gs": _cmd_gs,
    "gen": _cmd_gen,
    "textsim": _cmd_textsim,
}


def run(argv: Optional[List[str]] = None, out: Optional[TextIO] = None) -> int:
    """
    执行一条命令

    Args:
        argv: 参数列表，None 时取 sys.argv[1:]
        out: 报告输出流，None 时为标准输出

    Returns:
        int: 退出码
    """
    out = out if out is not None else sys.stdout
    try:
        settings = Settings.from_env()
    except ValueError as e:
        logger.error(f"❌ 配置错误: {e}")
        return EXIT_USAGE

    parser = build_parser(settings)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE

    level = settings.logging_level
    if args.verbose:
        level = logging.DEBUG if args.verbose > 1 else logging.INFO
    logging.getLogger().setLevel(level)
    logging.captureWarnings(True)

    try:
        COMMANDS[args.command](args, out)
    except DataValidationError as e:
        logger.error(f"❌ 数据校验失败: {e}")
        return EXIT_DATA
    except NumericError as e:
        logger.error(f"❌ 数值错误: {e}")
        return EXIT_NUMERIC
    except (UsageError, ValueError, OSError) as e:
        logger.error(f"❌ 用法错误: {e}")
        return EXIT_USAGE
    except TevsError as e:
        logger.error(f"❌ {e}")
        return EXIT_DATA
    return EXIT_OK
