from .scenario import MoveSpec, AgentSpec, Opening, Scenario
from .trace import Trace, TraceEvent, TraceHeader, TraceTermination, TerminationReason
from .runner import run, replay, selection_seed
