from .SimilarityMatrix import SimilarityMatrix
from .Cluster import Cluster
from .HierarchySet import HierarchySet, check_laminar
from .Dendrogram import Dendrogram, Merge
from .HaarBasis import HaarBasis
from .TreeModel import TreeModel
from .GammaSchedule import GammaSchedule
from .PatternSample import PatternSample
from .NoiseModel import NoiseModel
from .DetectorSpec import DetectorSpec, DETECTOR_KINDS
from .CalibrationResult import CalibrationResult
from .PowerCurve import PowerCurve, PowerRow
from .SnapshotSet import SnapshotSet
from .GapStats import GapStats
from .RecoveryTable import RecoveryTable, RecoveryRow
from .ExperimentConfig import ExperimentConfig
