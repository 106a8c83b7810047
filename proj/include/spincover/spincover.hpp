#pragma once

#include "spincover/errors.hpp"
#include "spincover/gf2.hpp"
#include "spincover/forms.hpp"
#include "spincover/orbits.hpp"
#include "spincover/report.hpp"
#include "spincover/homology.hpp"
#include "spincover/action_orth.hpp"
#include "spincover/action_symp.hpp"
#include "spincover/liftweak.hpp"
#include "spincover/verify.hpp"
