"""
例外階層

検証付き計算で「判定できなかった」場合は例外ではなく INCONCLUSIVE 判定で返す。
ここに定義する例外は、入力が定義域外・形式不正など呼び出し側の誤りを表す。
"""


class LjcertError(Exception):
    """ljcert の基底例外"""


class DomainError(LjcertError, ValueError):
    """定義域外の入力（r ≤ 0、ゼロベクトル、負の半径など）"""


class IntervalDivisionError(LjcertError, ZeroDivisionError):
    """0 を含む区間による除算"""


class BreakpointError(DomainError):
    """区分関数の折れ点をまたぐ区間で、片側指定なしに導関数を要求した"""


class PolynomialError(LjcertError, ValueError):
    """多項式演算の前提違反（ゼロ多項式、空区間など）"""


class NotSquarefreeError(PolynomialError):
    """無平方でない多項式。gcd(p, p') を保持する。"""

    def __init__(self, message: str, gcd: object):
        super().__init__(message)
        self.gcd = gcd


class ConfigurationError(LjcertError, ValueError):
    """粒子配置の不正（重複点、粒子数不足、添字範囲外）"""


class ConfigurationFormatError(ConfigurationError):
    """配置ファイルの書式エラー。行番号を保持する。"""

    def __init__(self, message: str, line_number: int):
        super().__init__(f"{line_number}行目: {message}")
        self.line_number = line_number
