from time import time
import sys

class Counter:
    """
        Prints a one-line status with percentage and ETA for a loop of
        'tot_iter' steps.  Written to stderr so that results piped through
        stdout stay clean.
    """

    def __init__(self, tot_iter, label = "Trials", stream = None):
        self.counter = 0
        self.t0 = time()
        self.t_last = self.t0
        self.perc = 0
        self.tot_iter = max(int(tot_iter), 1)
        self.label = label
        self.stream = sys.stderr if stream is None else stream
        self._write(f"\t{self.label}\t\t\tIn Progress {0:>3d}%")

    def _write(self, msg):
        print(msg, end = "", file = self.stream, flush = True)

    @staticmethod
    def _format(seconds):
        dd = int(seconds//86400)
        hh = int(seconds//3600)%24
        mm = int((seconds//60)%60)
        ss = int(seconds%60)
        msg = ""
        if dd > 0:
            msg += f"{dd:d} day(s) + "
        msg += f"{hh:02d}:{mm:02d}:{ss:02d}"
        return msg

    def __call__(self, steps = 1):
        self.counter = min(self.counter + steps, self.tot_iter)
        now = time()
        # Refresh at most once per second
        if now - self.t_last < 1 and self.counter < self.tot_iter:
            return
        self.t_last = now
        self.perc = int(100*self.counter/self.tot_iter)
        t_avg = (now - self.t0)/self.counter
        eta = t_avg*(self.tot_iter - self.counter)
        msg = (f"\r\t{self.label}\t\t\tIn Progress {self.perc:>3d}% – "
               f"{self._format(eta)}")
        self._write(msg)

    def close(self):
        msg = self._format(time() - self.t0)
        self._write(f"\r\t{self.label}\t\t\tComplete – Total Time Elapsed "
                    f"{msg}\n")
