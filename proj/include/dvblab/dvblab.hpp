#pragma once

#include "dvblab/ansatz.hpp"
#include "dvblab/dualization.hpp"
#include "dvblab/dvb.hpp"
#include "dvblab/equivalence.hpp"
#include "dvblab/errors.hpp"
#include "dvblab/geomexamples.hpp"
#include "dvblab/json_io.hpp"
#include "dvblab/linmap.hpp"
#include "dvblab/rational.hpp"
#include "dvblab/report.hpp"
#include "dvblab/rng.hpp"
#include "dvblab/seq.hpp"
#include "dvblab/suites.hpp"
