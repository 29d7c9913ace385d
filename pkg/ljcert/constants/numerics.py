"""検証付き計算・最適化の既定値"""

from fractions import Fraction

DEFAULT_MAX_DEPTH = 40                          # certify_sign の二分割の最大深さ
DEFAULT_ENCLOSURE_WIDTH = Fraction(1, 10**20)   # π, s, A の包含区間幅
REPORT_ENCLOSURE_DENOMINATOR = 10**24           # 出力用に外向き丸めする小数格子
DECIMAL_SIGNIFICANT_DIGITS = 12

ROOT_DISPLAY_WIDTH = Fraction(1, 10**5)         # ρ 表示用の根の分離区間幅
ROOT_CERTIFY_WIDTH = Fraction(1, 10**12)        # R(ρ3) > 0 判定用

OPTIMIZER_DEFAULT_TOL = 1e-8                    # 勾配の最大ノルム
OPTIMIZER_MAX_ITER = 20_000
OPTIMIZER_DEFAULT_JITTER = 1e-3                 # seed による初期摂動の振幅

FCC_DEFAULT_CUTOFF_FACTOR = 12.0                # 最近接距離の何倍まで格子和を取るか
FCC_MIN_CUTOFF_FACTOR = 3.0
FCC_SCALE_SEARCH_BOUNDS = (0.9, 1.1)

QUADRATURE_LIMIT = 200                          # scipy.integrate.quad の分割上限
